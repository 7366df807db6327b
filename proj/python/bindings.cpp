#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twtl/twtl.hpp"

namespace py = pybind11;
using namespace twtl;

namespace {

using PyWord = std::vector<std::vector<std::string>>;
using PyFormula = std::shared_ptr<Node>;

Word to_word(const PyWord& w, const Alphabet& ap) {
  Word out;
  for (const auto& props : w) out.push_back(ap.symbol(props));
  return out;
}

PyWord from_word(const Word& w, const Alphabet& ap) {
  PyWord out;
  for (Symbol s : w) {
    std::vector<std::string> props;
    for (int i = 0; i < ap.size(); ++i) {
      if ((s >> i) & 1U) props.push_back(ap.name(i));
    }
    out.push_back(props);
  }
  return out;
}

Alphabet alphabet_for(const Formula& f, const std::optional<std::vector<std::string>>& ap) {
  return ap ? Alphabet(*ap) : alphabet_of(f);
}

py::object tau_value(Tau t) {
  if (t == kNegInf) return py::float_(-std::numeric_limits<double>::infinity());
  if (t == kPosInf) return py::float_(std::numeric_limits<double>::infinity());
  return py::int_(t);
}

py::list tau_list(const RelaxationVector& v) {
  py::list out;
  for (Tau t : v) out.append(tau_value(t));
  return out;
}

std::vector<std::string> run_names(const TransitionSystem& ts, const std::vector<int>& run) {
  std::vector<std::string> out;
  for (int x : run) out.push_back(ts.names[x]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_twtl, m) {
  m.doc() = "Time window temporal logic: automata, relaxation and synthesis";
  m.attr("__version__") = kVersion;

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(to_string(e.kind()), e.what()).ptr());
    }
  });

  py::class_<Node, std::shared_ptr<Node>>(m, "Formula")
      .def("__str__", [](const PyFormula& f) { return format(f); })
      .def("__repr__", [](const PyFormula& f) { return "Formula('" + format(f) + "')"; })
      .def("__eq__", [](const PyFormula& a, const PyFormula& b) { return equal(a, b); })
      .def_property_readonly("time_bound", [](const PyFormula& f) { return time_bound(f); })
      .def_property_readonly("propositions", [](const PyFormula& f) { return propositions(f); })
      .def_property_readonly("within_count", [](const PyFormula& f) { return within_count(f); })
      .def("is_feasible", [](const PyFormula& f) { return is_feasible(f); })
      .def("is_dfw", [](const PyFormula& f) { return is_dfw(f); })
      .def("is_negation_normal", [](const PyFormula& f) { return is_negation_normal(f); })
      .def("normalize", [](const PyFormula& f) { return std::const_pointer_cast<Node>(normalize(f)); })
      .def("relax", [](const PyFormula& f, const RelaxationVector& tau) {
        return std::const_pointer_cast<Node>(relax(f, tau));
      })
      .def("evaluate", [](const PyFormula& f, const PyWord& w, std::optional<std::vector<std::string>> ap) {
        auto a = alphabet_for(f, ap);
        return evaluate(to_word(w, a), f, a);
      }, py::arg("word"), py::arg("ap") = py::none());

  m.def("parse", [](const std::string& text) { return std::const_pointer_cast<Node>(parse(text)); },
        py::arg("text"));
  m.def("parse_word", [](const std::string& text) {
    auto props = word_propositions(text);
    Alphabet ap(props);
    return from_word(parse_word(text, ap), ap);
  }, py::arg("text"));

  py::class_<Dfa>(m, "Dfa")
      .def_property_readonly("num_states", &Dfa::num_states)
      .def_property_readonly("num_edges", &Dfa::num_edges)
      .def_property_readonly("num_transitions", &Dfa::num_transitions)
      .def_property_readonly("initial", [](const Dfa& a) { return a.initial; })
      .def_property_readonly("finals", [](const Dfa& a) { return a.finals; })
      .def_property_readonly("propositions", [](const Dfa& a) { return a.ap.names(); })
      .def("accepts", [](const Dfa& a, const PyWord& w) { return accepts(a, to_word(w, a.ap)); })
      .def("accepts_prefix", [](const Dfa& a, const PyWord& w) { return accepts_prefix(a, to_word(w, a.ap)); })
      .def("dump", [](const Dfa& a) { return dump(a); })
      .def("to_dot", [](const Dfa& a) { return to_dot(a); });

  m.def("load_dump", [](const std::string& text) { return load_dump(text); }, py::arg("text"));
  m.def("translate", [](const PyFormula& f, bool inf, std::optional<std::vector<std::string>> ap) {
    return translate(f, inf, alphabet_for(f, ap));
  }, py::arg("formula"), py::arg("inf") = false, py::arg("ap") = py::none());

  m.def("temporal_relaxation", [](const PyFormula& f, const PyWord& w, std::optional<std::vector<std::string>> ap) {
    auto a = alphabet_for(f, ap);
    auto r = temporal_relaxation(to_word(w, a), f, a);
    py::dict out;
    out["satisfied"] = r.satisfied;
    out["tau_star"] = tau_value(r.tau_star);
    out["tau"] = tau_list(r.tau);
    out["tight"] = tau_list(r.tight);
    return out;
  }, py::arg("formula"), py::arg("word"), py::arg("ap") = py::none());

  py::class_<TransitionSystem>(m, "TransitionSystem")
      .def_property_readonly("num_states", &TransitionSystem::num_states)
      .def_property_readonly("num_transitions", &TransitionSystem::num_transitions)
      .def_property_readonly("names", [](const TransitionSystem& ts) { return ts.names; });

  m.def("load_ts", [](const std::string& text) { return expand_graph(parse_graph(text)); }, py::arg("text"));

  m.def("synthesize", [](const TransitionSystem& ts, const PyFormula& f, bool skip_initial) {
    SynthesisOptions opt;
    if (skip_initial) opt.convention = ProductConvention::SkipInitial;
    auto r = synthesize(ts, f, opt);
    auto ap = ts.ap.merged(alphabet_of(f));
    py::dict out;
    out["run"] = run_names(ts, r.run);
    out["word"] = from_word(r.word, ap);
    out["tau_star"] = tau_value(r.tau_star);
    out["tau"] = tau_list(r.relaxation.tau);
    out["product_states"] = r.stats.product_states;
    out["product_transitions"] = r.stats.product_transitions;
    return out;
  }, py::arg("ts"), py::arg("formula"), py::arg("skip_initial") = false);

  m.def("verify", [](const TransitionSystem& ts, const PyFormula& f) {
    auto r = verify(ts, f);
    py::dict out;
    out["holds"] = r.holds;
    out["counterexample"] = run_names(ts, r.counterexample);
    return out;
  }, py::arg("ts"), py::arg("formula"));

  m.def("learn_deadlines", [](const std::vector<PyWord>& pos, const std::vector<PyWord>& neg, const PyFormula& tmpl,
                              std::optional<std::vector<std::string>> ap_names) {
    auto ap = alphabet_for(tmpl, ap_names);
    std::vector<Word> p, n;
    for (const auto& w : pos) p.push_back(to_word(w, ap));
    for (const auto& w : neg) n.push_back(to_word(w, ap));
    auto r = learn_deadlines(p, n, tmpl, ap);
    py::dict out;
    out["deadlines"] = r.deadlines;
    out["formula"] = r.formula ? py::cast(std::const_pointer_cast<Node>(r.formula)) : py::none();
    out["misclassified"] = r.formula ? misclassification(p, n, r.formula, ap) : -1;
    return out;
  }, py::arg("positive"), py::arg("negative"), py::arg("template"), py::arg("ap") = py::none());
}
