#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <iterator>
#include <string>
#include <variant>
#include <vector>

#include "granule/approximation.hpp"
#include "granule/context.hpp"
#include "granule/definability.hpp"
#include "granule/lattice.hpp"

namespace py = pybind11;
using namespace granule;

namespace {

using AnyContext = std::variant<FormalContext, CompoundContext>;

AnyContext unwrap(const py::object& ctx) {
  if (py::isinstance<FormalContext>(ctx)) return ctx.cast<FormalContext>();
  if (py::isinstance<CompoundContext>(ctx)) return ctx.cast<CompoundContext>();
  throw py::type_error("expected a FormalContext or CompoundContext");
}

py::object wrap(AnyContext ctx) {
  return std::visit([](auto&& c) { return py::cast(std::move(c)); }, std::move(ctx));
}

const std::vector<std::string>& names_of(const AnyContext& ctx) {
  return std::visit([](const auto& c) -> const std::vector<std::string>& { return c.object_names(); }, ctx);
}

ObjectSet granule_of(const std::vector<std::string>& names, const std::vector<std::string>& wanted) {
  ObjectSet out(names.size());
  for (const auto& w : wanted) {
    auto it = std::find(names.begin(), names.end(), w);
    if (it == names.end()) throw py::key_error("unknown object '" + w + "'");
    out.insert(static_cast<std::size_t>(it - names.begin()));
  }
  return out;
}

template <class Tag>
std::vector<std::string> named(const IndexSet<Tag>& s, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t i) { out.push_back(names.at(i)); });
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw py::value_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

AnyContext load(const std::string& path) {
  auto text = slurp(path);
  if (looks_like_compound_json(text)) return parse_compound_json(text);
  return parse_context(text);
}

CompoundContext three_way_of(const AnyContext& ctx) {
  if (auto* f = std::get_if<FormalContext>(&ctx)) return appose_negation(*f);
  return std::get<CompoundContext>(ctx);
}

const FormalContext& formal_of(const AnyContext& ctx) {
  if (auto* f = std::get_if<FormalContext>(&ctx)) return *f;
  throw py::type_error("this mode needs a FormalContext");
}

const CompoundContext& compound_of(const AnyContext& ctx) {
  if (auto* c = std::get_if<CompoundContext>(&ctx)) return *c;
  throw py::type_error("this mode needs a CompoundContext");
}

py::dict verdict_dict(const Verdict& v, const Vocabulary& vocab, const std::vector<std::string>& objects) {
  py::dict out;
  out["status"] = to_string(v.status);
  out["formula"] = v.description ? py::cast(render(*v.description, vocab)) : py::none();
  out["reason"] = v.reason ? py::cast(to_string(*v.reason)) : py::none();
  out["witness"] = v.witness ? py::cast(named(*v.witness, objects)) : py::none();
  return out;
}

py::dict define(const py::object& handle, const std::vector<std::string>& granule, const std::string& mode) {
  auto ctx = unwrap(handle);
  const auto& objects = names_of(ctx);
  auto x = granule_of(objects, granule);
  if (mode == "wedge") return verdict_dict(is_wedge_definable(formal_of(ctx), x), vocabulary_of(formal_of(ctx)), objects);
  if (mode == "vee") return verdict_dict(is_vee_definable(formal_of(ctx), x), vocabulary_of(formal_of(ctx)), objects);
  if (mode == "three-way") {
    auto cctx = three_way_of(ctx);
    return verdict_dict(is_three_way_definable(cctx, x), vocabulary_of(cctx), objects);
  }
  if (mode == "cn") return verdict_dict(is_cn_definable(compound_of(ctx), x), vocabulary_of(compound_of(ctx)), objects);
  throw py::value_error("unknown mode '" + mode + "'");
}

py::dict approximate(const py::object& handle, const std::vector<std::string>& granule, const std::string& mode,
                     const std::string& direction) {
  auto ctx = unwrap(handle);
  const auto& objects = names_of(ctx);
  auto x = granule_of(objects, granule);
  const bool upper = direction == "upper";
  if (!upper && direction != "lower") throw py::value_error("direction must be 'upper' or 'lower'");

  Approximation a{};
  Vocabulary vocab;
  if (mode == "wedge" || mode == "vee") {
    const auto& f = formal_of(ctx);
    vocab = vocabulary_of(f);
    if (mode == "wedge")
      a = upper ? upper_wedge(f, x) : lower_wedge(f, x);
    else
      a = upper ? upper_vee(f, x) : lower_vee(f, x);
  } else if (mode == "three-way") {
    auto cctx = three_way_of(ctx);
    vocab = vocabulary_of(cctx);
    a = upper ? upper_three_way(cctx, x) : lower_three_way(cctx, x);
  } else if (mode == "cn") {
    if (!upper) throw py::value_error("cn mode has upper approximations only");
    vocab = vocabulary_of(compound_of(ctx));
    a = upper_cn(compound_of(ctx), x);
  } else {
    throw py::value_error("unknown mode '" + mode + "'");
  }

  py::list results;
  for (const auto& g : a.granules)
    results.append(py::make_tuple(named(g.granule, objects),
                                  g.description ? py::cast(render(*g.description, vocab)) : py::none()));
  py::dict out;
  out["direction"] = to_string(a.direction);
  out["mode"] = to_string(a.mode);
  out["exact"] = a.exact;
  out["results"] = results;
  out["reason"] = a.inapplicable ? py::cast(to_string(*a.inapplicable)) : py::none();
  return out;
}

py::list concepts(const py::object& handle, const std::string& variant, bool force) {
  auto ctx = unwrap(handle);
  EnumerationOptions options{force};
  const auto& objects = names_of(ctx);
  py::list out;
  if (variant == "cn") {
    const auto& cctx = compound_of(ctx);
    for (const auto& c : enumerate_cn(cctx, options)) {
      auto intent = named(c.intent.a_part, cctx.a_block().attribute_names());
      auto b = named(c.intent.b_part, cctx.b_block().attribute_names());
      intent.insert(intent.end(), b.begin(), b.end());
      out.append(py::make_tuple(named(c.extent, objects), intent));
    }
    return out;
  }
  ConceptLattice lattice;
  std::vector<std::string> attributes;
  if (variant == "three-way") {
    auto cctx = three_way_of(ctx);
    lattice = enumerate_three_way(cctx, options);
    attributes = cctx.flattened().attribute_names();
  } else if (variant == "formal" || variant == "object-oriented") {
    const auto& f = formal_of(ctx);
    lattice = variant == "formal" ? enumerate_formal(f, options) : enumerate_object_oriented(f, options);
    attributes = f.attribute_names();
  } else {
    throw py::value_error("unknown variant '" + variant + "'");
  }
  for (const auto& c : lattice.concepts) out.append(py::make_tuple(named(c.extent, objects), named(c.intent, attributes)));
  return out;
}

std::vector<std::string> evaluate_formula(const py::object& handle, const std::string& formula) {
  auto ctx = unwrap(handle);
  return std::visit(
      [&](const auto& c) { return named(evaluate(c, parse_description(formula, c)), c.object_names()); }, ctx);
}

}  // namespace

PYBIND11_MODULE(_granule, m) {
  m.doc() = "Granule definability and approaching descriptions over concept lattices";

  py::register_exception<ContextError>(m, "ContextError", PyExc_ValueError);
  py::register_exception<FormulaError>(m, "FormulaError", PyExc_ValueError);
  py::register_exception<SizeGuardError>(m, "SizeGuardError", PyExc_RuntimeError);

  py::class_<FormalContext>(m, "FormalContext")
      .def(py::init<std::vector<std::string>, std::vector<std::string>, const std::vector<std::vector<bool>>&>(),
           py::arg("objects"), py::arg("attributes"), py::arg("incidence"))
      .def_property_readonly("objects", &FormalContext::object_names)
      .def_property_readonly("attributes", &FormalContext::attribute_names)
      .def_property_readonly("incidence", &FormalContext::incidence)
      .def("to_cxt", [](const FormalContext& c) { return serialize_context(c, ContextFormat::Cxt); })
      .def("to_json", [](const FormalContext& c) { return serialize_context(c, ContextFormat::Json); })
      .def("complement", [](const FormalContext& c, const std::string& prefix) { return complement_context(c, prefix); },
           py::arg("prefix") = std::string(kDefaultNegationPrefix))
      .def("appose", [](const FormalContext& c, const std::string& prefix) { return appose_negation(c, prefix); },
           py::arg("prefix") = std::string(kDefaultNegationPrefix))
      .def("__eq__", [](const FormalContext& x, const FormalContext& y) { return x == y; })
      .def("__repr__", [](const FormalContext& c) {
        return "<FormalContext " + std::to_string(c.object_count()) + " objects x " +
               std::to_string(c.attribute_count()) + " attributes>";
      });

  py::class_<CompoundContext>(m, "CompoundContext")
      .def_property_readonly("flavor", [](const CompoundContext& c) { return to_string(c.flavor()); })
      .def_property_readonly("objects", &CompoundContext::object_names)
      .def_property_readonly("a_block", &CompoundContext::a_block)
      .def_property_readonly("b_block", &CompoundContext::b_block)
      .def_property_readonly("flattened", &CompoundContext::flattened)
      .def("to_json", &serialize_compound_json)
      .def("__eq__", [](const CompoundContext& x, const CompoundContext& y) { return x == y; })
      .def("__repr__", [](const CompoundContext& c) {
        return std::string("<CompoundContext ") + to_string(c.flavor()) + ", " + std::to_string(c.object_count()) +
               " objects>";
      });

  m.def("parse_context", [](const std::string& text) { return parse_context(text); }, py::arg("text"),
        "Parse a CXT or JSON formal context.");
  m.def("parse_compound", [](const std::string& text) { return parse_compound_json(text); }, py::arg("text"),
        "Parse a compound context in JSON.");
  m.def("load", [](const std::string& path) { return wrap(load(path)); }, py::arg("path"), "Load a formal or compound context from a file.");
  m.def("common_necessary", &make_cn_context, py::arg("a_block"), py::arg("b_block"),
        "Pair two contexts over the same objects into a common-and-necessary compound.");

  m.def("concepts", &concepts, py::arg("context"), py::arg("variant") = "formal", py::arg("force") = false,
        "List (extent, intent) pairs of one concept system, by name.");
  m.def("define", &define, py::arg("context"), py::arg("granule"), py::arg("mode") = "wedge",
        "Decide definability of a granule given by object names.");
  m.def("approximate", &approximate, py::arg("context"), py::arg("granule"), py::arg("mode") = "wedge",
        py::arg("direction") = "upper", "Approaching descriptions of a granule given by object names.");
  m.def("evaluate", &evaluate_formula, py::arg("context"), py::arg("formula"),
        "Objects satisfying a description such as 'a1 & (b2 | b4)'.");
}
