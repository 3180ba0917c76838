// granule: concept enumeration, definability checks and approaching
// descriptions from the command line.
//
// Exit codes: 0 success / definable, 1 indefinable, 2 input or usage error,
// 3 size guard refusal, 4 inapplicable.

#include <unistd.h>

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "granule/approximation.hpp"
#include "granule/context.hpp"
#include "granule/definability.hpp"
#include "granule/lattice.hpp"
#include "granule/report.hpp"

namespace {

using namespace granule;

constexpr int kExitDefinable = 0;
constexpr int kExitIndefinable = 1;
constexpr int kExitInputError = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitInapplicable = 4;

// Usage and input failures; always exit 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

using Loaded = std::variant<FormalContext, CompoundContext>;

Loaded load(const std::string& path, const std::string& compound_path) {
  auto text = read_input(path);
  if (looks_like_compound_json(text)) {
    if (!compound_path.empty()) throw InputError("--compound cannot be combined with a compound JSON input");
    return parse_compound_json(text);
  }
  auto primary = parse_context(text);
  if (compound_path.empty()) return primary;
  return make_cn_context(primary, parse_context(read_input(compound_path)));
}

const FormalContext& need_formal(const Loaded& in, const char* what) {
  if (auto* f = std::get_if<FormalContext>(&in)) return *f;
  throw InputError(std::string(what) + " needs a plain formal context");
}

CompoundContext need_three_way(const Loaded& in) {
  if (auto* f = std::get_if<FormalContext>(&in)) return appose_negation(*f);
  const auto& c = std::get<CompoundContext>(in);
  if (c.flavor() != Flavor::ThreeWay) throw InputError("three-way mode needs a formal or three_way input");
  return c;
}

const CompoundContext& need_cn(const Loaded& in) {
  if (auto* c = std::get_if<CompoundContext>(&in); c && c->flavor() == Flavor::CommonNecessary) return *c;
  throw InputError("cn mode needs a common_necessary compound input (JSON, or --compound)");
}

const std::vector<std::string>& object_names(const Loaded& in) {
  return std::visit([](const auto& c) -> const std::vector<std::string>& { return c.object_names(); }, in);
}

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

// Names win over 1-based positions; an ambiguous token gets a warning.
ObjectSet parse_granule(const std::string& spec, const std::vector<std::string>& names) {
  ObjectSet out(names.size());
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    std::optional<std::size_t> by_name;
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == token) by_name = k;
    std::optional<std::size_t> by_index;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc{} && ptr == token.data() + token.size() && value >= 1 && value <= names.size())
      by_index = value - 1;
    if (by_name) {
      if (by_index && *by_index != *by_name)
        std::cerr << "warning: '" << token << "' names object " << (*by_name + 1)
                  << " and is also a position; using the name\n";
      out.insert(*by_name);
    } else if (by_index) {
      out.insert(*by_index);
    } else {
      throw InputError("unknown object '" + token + "'");
    }
  }
  return out;
}

std::string resolve_format(const std::string& requested) {
  if (!requested.empty()) return requested;
  return isatty(STDOUT_FILENO) ? "text" : "json";
}

int status_exit(Status s) {
  switch (s) {
    case Status::Definable: return kExitDefinable;
    case Status::Indefinable: return kExitIndefinable;
    case Status::Inapplicable: return kExitInapplicable;
  }
  return kExitInputError;
}

struct Options {
  std::string input;
  std::string compound;
  std::string variant = "formal";
  std::string format;
  std::string mode;
  std::string direction;
  std::string granule;
  std::string op;
  std::string output;
  std::string prefix = std::string(kDefaultNegationPrefix);
  bool force = false;
  bool minimal = false;
  bool all = true;
};

int cmd_concepts(const Options& o) {
  auto in = load(o.input, o.compound);
  auto format = resolve_format(o.format);
  EnumerationOptions eo{o.force};
  const auto& objects = object_names(in);

  if (o.variant == "cn") {
    const auto& cctx = need_cn(in);
    auto cs = enumerate_cn(cctx, eo);
    if (format == "dot") throw InputError("cn concepts carry no order; use text or json");
    std::cout << (format == "json" ? cn_concepts_json(cs, cctx).dump(2) + "\n" : cn_concepts_text(cs, cctx));
    return 0;
  }

  ConceptLattice lattice;
  std::vector<std::string> attributes;
  if (o.variant == "three-way") {
    auto cctx = need_three_way(in);
    lattice = enumerate_three_way(cctx, eo);
    attributes = cctx.flattened().attribute_names();
  } else {
    const auto& ctx = need_formal(in, "this variant");
    lattice = o.variant == "formal" ? enumerate_formal(ctx, eo) : enumerate_object_oriented(ctx, eo);
    attributes = ctx.attribute_names();
  }
  if (format == "json")
    std::cout << lattice_json(lattice, attributes).dump(2) << "\n";
  else if (format == "dot")
    std::cout << lattice_dot(lattice, objects, attributes);
  else
    std::cout << lattice_text(lattice, objects, attributes);
  return 0;
}

int cmd_define(const Options& o) {
  auto in = load(o.input, o.compound);
  auto format = resolve_format(o.format);
  if (format == "dot") throw InputError("define supports text and json output");
  auto x = parse_granule(o.granule, object_names(in));

  Verdict v;
  Vocabulary vocab;
  std::vector<Description> minimal;
  if (o.mode == "wedge") {
    const auto& ctx = need_formal(in, "wedge mode");
    v = is_wedge_definable(ctx, x);
    vocab = vocabulary_of(ctx);
    if (o.minimal) minimal = minimal_wedge_descriptions(ctx, x);
  } else if (o.mode == "vee") {
    const auto& ctx = need_formal(in, "vee mode");
    v = is_vee_definable(ctx, x);
    vocab = vocabulary_of(ctx);
    if (o.minimal) minimal = minimal_vee_descriptions(ctx, x);
  } else if (o.mode == "three-way") {
    auto cctx = need_three_way(in);
    v = is_three_way_definable(cctx, x);
    vocab = vocabulary_of(cctx);
    if (o.minimal) minimal = minimal_three_way_descriptions(cctx, x);
  } else {
    const auto& cctx = need_cn(in);
    if (x.empty()) throw InputError("cn mode needs a nonempty granule");
    v = is_cn_definable(cctx, x);
    vocab = vocabulary_of(cctx);
    if (o.minimal) minimal = minimal_cn_descriptions(cctx, x);
  }

  if (format == "json") {
    auto doc = verdict_json(v, vocab);
    if (o.minimal) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& d : minimal) list.push_back(render(d, vocab));
      doc["minimal"] = list;
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << verdict_text(v, vocab, object_names(in));
    for (const auto& d : minimal) std::cout << "  minimal: " << render(d, vocab) << "\n";
  }
  return status_exit(v.status);
}

int cmd_approx(const Options& o) {
  auto in = load(o.input, o.compound);
  auto format = resolve_format(o.format);
  if (format == "dot") throw InputError("approx supports text and json output");
  auto x = parse_granule(o.granule, object_names(in));
  const bool upper = o.direction == "upper";

  Approximation a{};
  Vocabulary vocab;
  if (o.mode == "wedge" || o.mode == "vee") {
    const auto& ctx = need_formal(in, "this mode");
    vocab = vocabulary_of(ctx);
    if (o.mode == "wedge") {
      if (!upper && x.is_full()) throw InputError("lower approximation needs a granule smaller than the universe");
      a = upper ? upper_wedge(ctx, x) : lower_wedge(ctx, x);
    } else {
      if (upper && x.empty()) throw InputError("upper vee approximation needs a nonempty granule");
      a = upper ? upper_vee(ctx, x) : lower_vee(ctx, x);
    }
  } else if (o.mode == "three-way") {
    auto cctx = need_three_way(in);
    vocab = vocabulary_of(cctx);
    if (!upper && x.is_full()) throw InputError("lower approximation needs a granule smaller than the universe");
    a = upper ? upper_three_way(cctx, x) : lower_three_way(cctx, x);
  } else {
    const auto& cctx = need_cn(in);
    vocab = vocabulary_of(cctx);
    if (!upper) throw InputError("cn mode has upper approximations only");
    if (x.empty()) throw InputError("cn mode needs a nonempty granule");
    a = upper_cn(cctx, x);
  }

  if (format == "json")
    std::cout << approximation_json(a, vocab).dump(2) << "\n";
  else
    std::cout << approximation_text(a, vocab, object_names(in));
  return a.inapplicable ? kExitInapplicable : 0;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

int cmd_convert(const Options& o) {
  auto in = load(o.input, "");
  const auto& ctx = need_formal(in, "convert");
  const bool json = o.format == "json";
  std::string text;
  if (o.op == "complement") {
    text = serialize_context(complement_context(ctx, o.prefix), json ? ContextFormat::Json : ContextFormat::Cxt);
  } else {
    auto cctx = appose_negation(ctx, o.prefix);
    text = json ? serialize_compound_json(cctx) : serialize_context(cctx.flattened(), ContextFormat::Cxt);
  }
  write_output(o.output, text);
  return 0;
}

int cmd_validate(const Options& o) {
  auto in = load(o.input, o.compound);
  std::visit(
      [](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FormalContext>) {
          std::cout << "formal context: " << c.object_count() << " objects, " << c.attribute_count()
                    << " attributes\n";
        } else {
          std::cout << to_string(c.flavor()) << " compound context: " << c.object_count() << " objects, "
                    << c.a_block().attribute_count() << " + " << c.b_block().attribute_count() << " attributes\n";
        }
      },
      in);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Granule definability and approaching descriptions over concept lattices"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "context file (CXT or JSON), '-' for stdin")->required();
  };
  auto add_compound = [&](CLI::App* sub) {
    sub->add_option("--compound", o.compound, "B-block context for a common-and-necessary compound");
  };
  auto add_granule = [&](CLI::App* sub) {
    sub->add_option("--granule,-g", o.granule, "comma-separated object names or 1-based positions")->required();
  };
  const std::vector<std::string> modes{"wedge", "vee", "three-way", "cn"};

  auto* concepts = app.add_subcommand("concepts", "enumerate the concepts of one system");
  add_input(concepts);
  add_compound(concepts);
  concepts->add_option("--variant", o.variant, "concept system")
      ->check(CLI::IsMember({"formal", "object-oriented", "three-way", "cn"}));
  concepts->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  concepts->add_flag("--force", o.force, "skip the enumeration size guard");

  auto* define = app.add_subcommand("define", "decide definability and describe the granule");
  add_input(define);
  add_compound(define);
  add_granule(define);
  define->add_option("--mode", o.mode, "description mode")->required()->check(CLI::IsMember(modes));
  define->add_flag("--minimal", o.minimal, "also list every inclusion-minimal description");
  define->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* approx = app.add_subcommand("approx", "approaching descriptions of a granule");
  add_input(approx);
  add_compound(approx);
  add_granule(approx);
  approx->add_option("--mode", o.mode, "description mode")->required()->check(CLI::IsMember(modes));
  approx->add_option("--direction", o.direction, "upper or lower")
      ->required()
      ->check(CLI::IsMember({"upper", "lower"}));
  approx->add_flag("--all", o.all, "report every optimal granule (default)");
  approx->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* convert = app.add_subcommand("convert", "complement or appose a context");
  add_input(convert);
  convert->add_option("--op", o.op, "transformation")->required()->check(CLI::IsMember({"complement", "appose"}));
  convert->add_option("--output,-o", o.output, "output path (stdout by default)");
  convert->add_option("--format", o.format, "output format")->check(CLI::IsMember({"cxt", "json"}));
  convert->add_option("--prefix", o.prefix, "name prefix for negated attributes");

  auto* validate = app.add_subcommand("validate", "check that a context parses");
  add_input(validate);
  add_compound(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*concepts) return cmd_concepts(o);
    if (*define) return cmd_define(o);
    if (*approx) return cmd_approx(o);
    if (*convert) return cmd_convert(o);
    if (*validate) return cmd_validate(o);
  } catch (const SizeGuardError& e) {
    std::cerr << "granule: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const std::exception& e) {
    std::cerr << "granule: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
