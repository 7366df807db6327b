state x0 A
state x1 B
state x2 B
state x3
state x4 A
initial x0
edge x0 x0 1 directed
edge x0 x1 1 directed
edge x1 x2 1 directed
edge x2 x3 1 directed
edge x3 x4 1 directed
edge x4 x0 1 directed
