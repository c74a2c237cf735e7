// Python bindings for the main operations: braid word problem, relation
// verification, derivation replay and search, presentations from group
// actions, and face-class reduction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hilden/action.hpp"
#include "hilden/braid.hpp"
#include "hilden/derivation.hpp"
#include "hilden/faces.hpp"
#include "hilden/relations.hpp"

namespace py = pybind11;

namespace {

hilden::Gen make_gen(const std::string& kind, int index) {
  if (kind.size() != 1) throw std::invalid_argument("generator kind must be one of p s t r");
  switch (kind[0]) {
    case 'p': return {hilden::GenKind::P, index};
    case 's': return {hilden::GenKind::S, index};
    case 't': return {hilden::GenKind::T, index};
    case 'r': return {hilden::GenKind::R, index};
  }
  throw std::invalid_argument("generator kind must be one of p s t r");
}

}  // namespace

PYBIND11_MODULE(hildenpy, m) {
  m.doc() = "braid word problem, relation checking, derivation replay, and "
            "presentations from group actions";

  m.def(
      "normal_form",
      [](const std::string& word, int strands) {
        return hilden::format_normal_form(
            hilden::normal_form(hilden::parse_braid_word(word, strands)));
      },
      py::arg("word"), py::arg("strands"),
      "Left-greedy normal form of a braid word, as text.");

  m.def(
      "braid_equal",
      [](const std::string& a, const std::string& b, int strands) {
        return hilden::braid_equal(hilden::parse_braid_word(a, strands),
                                   hilden::parse_braid_word(b, strands));
      },
      py::arg("word1"), py::arg("word2"), py::arg("strands"),
      "Decide whether two braid words represent the same braid.");

  m.def(
      "exponent_sum",
      [](const std::string& word, int strands) {
        return hilden::exponent_sum(hilden::parse_braid_word(word, strands));
      },
      py::arg("word"), py::arg("strands"), "Signed letter count of a braid word.");

  m.def(
      "permutation_image",
      [](const std::string& word, int strands) {
        return hilden::permutation_image(hilden::parse_braid_word(word, strands)).images();
      },
      py::arg("word"), py::arg("strands"),
      "Underlying permutation of a braid word as a 0-based image list.");

  m.def(
      "free_reduce",
      [](const std::string& word, int strands) {
        return hilden::format_braid_word(
            hilden::braid_free_reduce(hilden::parse_braid_word(word, strands)));
      },
      py::arg("word"), py::arg("strands"), "Cancel adjacent inverse letters.");

  m.def(
      "generator_word",
      [](const std::string& kind, int index, int n) {
        return hilden::format_braid_word(hilden::generator_braid_word(make_gen(kind, index), n));
      },
      py::arg("kind"), py::arg("index"), py::arg("n"),
      "Braid word of a tube-group generator (kind 'p', 's', 't', or 'r').");

  m.def(
      "verify_families",
      [](int n, const std::string& family) {
        hilden::VerifyReport rep = hilden::verify_families(n, family);
        return py::make_tuple(rep.text, rep.ok());
      },
      py::arg("n"), py::arg("family") = std::string(),
      "Instantiate and check relation families; returns (report_text, ok).");

  m.def(
      "check_derivation_file",
      [](const std::string& path, int n) {
        hilden::SchemaRegistry registry;
        hilden::Derivation d = hilden::load_derivation_file(path, n, registry);
        hilden::CheckOutcome out = hilden::check_derivation(d, n, registry);
        return py::make_tuple(out.ok, out.ok ? hilden::format_derivation(d) : out.detail);
      },
      py::arg("path"), py::arg("n"),
      "Replay a recorded derivation file; returns (ok, detail_or_text).");

  m.def(
      "search_derivation",
      [](const std::string& start, const std::string& end, int n, int depth,
         long long node_cap) {
        hilden::SchemaRegistry registry;
        hilden::SearchOutcome out =
            hilden::search_derivation(hilden::parse_abstract_word(start),
                                      hilden::parse_abstract_word(end), n, registry, depth,
                                      static_cast<size_t>(node_cap));
        std::string status = out.status == hilden::SearchOutcome::Status::found ? "found"
                             : out.status == hilden::SearchOutcome::Status::cap_exceeded
                                 ? "cap_exceeded"
                                 : "not_found";
        std::string text =
            out.status == hilden::SearchOutcome::Status::found ? format_derivation(out.derivation)
                                                               : "";
        return py::make_tuple(status, text);
      },
      py::arg("start"), py::arg("end"), py::arg("n"), py::arg("depth"),
      py::arg("node_cap") = 100000,
      "Breadth-first search for a derivation; returns (status, derivation_text).");

  m.def(
      "presentation_from_file",
      [](const std::string& path, long long enumerate_limit) {
        hilden::ActionComplex cx = hilden::parse_complex_file(path);
        hilden::ValidationReport v = hilden::validate_complex(cx);
        if (!v.ok) {
          std::string msg = "invalid complex:";
          for (const std::string& p : v.problems) msg += "\n  " + p;
          throw std::invalid_argument(msg);
        }
        hilden::Presentation p = hilden::assemble_presentation(cx);
        auto order = hilden::coset_enumerate(p, {}, enumerate_limit);
        py::object order_obj = order ? py::cast(*order) : py::none();
        return py::make_tuple(hilden::format_presentation(p), order_obj);
      },
      py::arg("path"), py::arg("enumerate_limit") = 10000,
      "Assemble the presentation for a complex file; returns (text, order_or_None).");

  m.def(
      "reduce_face_class",
      [](const std::string& cls) {
        return hilden::format_reduction_trace(
            hilden::reduce_to_basis(hilden::parse_face_class(cls)));
      },
      py::arg("face_class"), "Reduce a face class to basis classes; returns the trace text.");
}
