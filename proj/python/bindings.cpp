#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "polarnc/code.hpp"
#include "polarnc/ideal.hpp"
#include "polarnc/io.hpp"
#include "polarnc/polarization.hpp"

namespace py = pybind11;
using namespace polarnc;

namespace {

std::vector<std::string> prime_strings(const std::vector<MotivicPrime>& primes) {
  std::vector<std::string> out;
  for (const auto& p : primes) out.push_back(p.str());
  return out;
}

std::vector<std::string> motif_strings(const std::vector<Motif>& ms, bool split) {
  return render(ms, split);
}

// Doubled codes name their variables X1..Xn, Y1..Yn.
VariableSpace space_of(const Code& c, bool doubled) { return VariableSpace::for_length(c.length(), doubled); }

std::vector<int> zero_based(const std::vector<int>& neurons) {
  std::vector<int> out;
  for (int i : neurons) out.push_back(i - 1);
  return out;
}

}  // namespace

PYBIND11_MODULE(_polarnc, m) {
  m.doc() = "Neural codes, neural ideals and their polarization";

  py::register_exception<Error>(m, "PolarError", PyExc_ValueError);

  py::class_<Motif>(m, "Motif")
      .def(py::init(&Motif::parse), py::arg("text"))
      .def_property_readonly("length", &Motif::length)
      .def("str", &Motif::str, py::arg("split") = false)
      .def("__str__", [](const Motif& a) { return a.str(); })
      .def("__repr__", [](const Motif& a) { return "Motif('" + a.str() + "')"; })
      .def("__eq__", [](const Motif& a, const Motif& b) { return a == b; })
      .def("__le__", [](const Motif& a, const Motif& b) { return motif_leq(a, b); })
      .def("__add__", [](const Motif& a, const Motif& b) { return motif_add(a, b); })
      .def("is_disjoint", [](const Motif& a, const Motif& b) { return is_disjoint(a, b); })
      .def("bar", [](const Motif& a) { return bar(a); })
      .def("polarize", &polarize_motif)
      .def("depolarize", &depolarize)
      .def("is_polar", &is_polar);

  py::class_<Code>(m, "Code")
      .def(py::init([](const std::vector<std::string>& words, std::optional<int> length) {
             return io::parse_code(words, length);
           }),
           py::arg("words"), py::arg("length") = py::none())
      .def_property_readonly("length", &Code::length)
      .def("__len__", &Code::size)
      .def("__contains__", [](const Code& c, const std::string& w) { return c.contains(Word::parse(w)); })
      .def("__eq__", [](const Code& a, const Code& b) { return a == b; })
      .def("words", [](const Code& c) { return c.strings(); })
      .def("hex", &Code::hex)
      .def("complement", [](const Code& c) { return complement(c); });

  m.def("variety", [](const std::string& a) { return variety(Motif::parse(a)); });
  m.def("is_motif_of", [](const std::string& a, const Code& c) { return is_motif_of(Motif::parse(a), c); });
  m.def("max_mot", [](const Code& c) { return motif_strings(max_mot(c), false); });
  m.def(
      "max_mot_complement",
      [](const std::vector<std::string>& motifs, int length) {
        std::vector<Motif> ms;
        for (const auto& s : motifs) ms.push_back(Motif::parse(s));
        return motif_strings(max_mot_complement(length, ms), false);
      },
      py::arg("motifs"), py::arg("length"));
  m.def(
      "neural_ideal_cf",
      [](const Code& c, bool doubled) { return neural_ideal_cf(c, space_of(c, doubled)).strings(); },
      py::arg("code"), py::arg("doubled") = false);
  m.def(
      "cf_of_pm_ideal",
      [](const std::vector<std::string>& terms, std::optional<int> n, bool doubled) {
        VariableSpace space = n ? VariableSpace{*n, doubled} : io::infer_space(terms);
        if (!n) space.doubled = space.doubled || doubled;
        return cf_of_pm_ideal(space, io::parse_terms(terms, space)).strings();
      },
      py::arg("terms"), py::arg("n") = py::none(), py::arg("doubled") = false);
  m.def(
      "min_primes",
      [](const Code& c, bool doubled) { return prime_strings(min_primes(c, space_of(c, doubled))); },
      py::arg("code"), py::arg("doubled") = false);
  m.def(
      "primary_decomposition",
      [](const Code& c, bool doubled) { return prime_strings(primary_decomposition(c, space_of(c, doubled))); },
      py::arg("code"), py::arg("doubled") = false);
  m.def("variety_of_neural_ideal", &variety_of_neural_ideal);

  m.def("polarize_code", &polarize_code);
  m.def("formal_polarize", &formal_polarize);
  m.def("max_mot_polarized", [](const Code& c) { return motif_strings(max_mot_polarized(c), true); });
  m.def("cf_polarized_ideal", [](const Code& c) { return cf_polarized_ideal(c).strings(); });
  m.def("cf_of_polarized_code", [](const Code& c) { return cf_of_polarized_code(c).strings(); });
  m.def("min_primes_polarized", [](const Code& c) { return prime_strings(min_primes_polarized(c)); });
  m.def("polarize_partial_motif",
        [](const std::string& a) { return polarize_partial_motif(PartialMotif::parse(a)).str(true); });

  m.def(
      "deactivate",
      [](const Code& c, const std::vector<int>& neurons) {
        return deactivate(c, zero_based(neurons)).strings();
      },
      py::arg("code"), py::arg("neurons"));
  m.def(
      "max_par_mot",
      [](const Code& c, const std::vector<int>& neurons) {
        std::vector<std::string> out;
        for (const auto& a : max_par_mot(deactivate(c, zero_based(neurons)))) out.push_back(a.str());
        return out;
      },
      py::arg("code"), py::arg("neurons"));
  m.def(
      "gjs_prime_test",
      [](const std::string& motif, const Code& c) {
        const auto r = gjs_prime_test(Motif::parse(motif), c);
        std::vector<int> inactive;
        for (int i : r.inactive) inactive.push_back(i + 1);
        py::dict d;
        d["contains"] = r.contains;
        d["stripped"] = r.stripped.str();
        d["inactive"] = inactive;
        d["deactivated"] = r.deactivated.str();
        d["depolarized"] = r.depolarized.str();
        d["partial_code"] = r.partial_code.strings();
        return d;
      },
      py::arg("motif"), py::arg("code"));
}
