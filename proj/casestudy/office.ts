# Environment of the synthesis case study. Weights are travel times.
state Base
state A A
state B B
state C C
state D D
initial Base
edge Base A 2
edge Base B 1
edge Base C 1
edge Base D 2
edge A B 3
edge A C 2
edge A D 3
edge B C 3
edge C D 3
stay all
