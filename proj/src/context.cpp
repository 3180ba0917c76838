#include "granule/context.hpp"

#include <charconv>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "json.hpp"

namespace granule {

namespace {

using nlohmann::json;

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw ContextError(std::string("duplicate ") + what + " name '" + n + "'");
}

std::string describe_position(std::size_t line, std::size_t column) {
  if (line == 0) return {};
  std::ostringstream os;
  os << "line " << line;
  if (column != 0) os << ", column " << column;
  os << ": ";
  return os.str();
}

// Splits on LF.  A final empty piece produced by a trailing newline is dropped.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  if (!lines.empty() && !lines.back().empty() && lines.back().back() == '\r')
    lines.back().remove_suffix(1);
  return lines;
}

std::size_t parse_count(std::string_view line, std::size_t lineno, const char* what) {
  std::size_t value = 0;
  auto first = line.data();
  auto last = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (line.empty() || ec != std::errc{} || ptr != last)
    throw ParseError(std::string("malformed header: expected ") + what + " count, got '" +
                         std::string(line) + "'",
                     lineno);
  if (value == 0)
    throw ParseError(std::string("malformed header: ") + what + " count must be positive", lineno);
  return value;
}

std::vector<std::string> string_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array())
    throw ParseError(std::string("missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& v : doc.at(key)) {
    if (!v.is_string()) throw ParseError(std::string("non-string entry in '") + key + "'");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::vector<bool>> bit_matrix(const json& doc, const char* key, std::size_t rows,
                                          std::size_t cols) {
  if (!doc.contains(key) || !doc.at(key).is_array())
    throw ParseError(std::string("missing array '") + key + "'");
  const auto& m = doc.at(key);
  if (m.size() != rows)
    throw ParseError(std::string("dimension mismatch: '") + key + "' has " +
                     std::to_string(m.size()) + " rows, expected " + std::to_string(rows));
  std::vector<std::vector<bool>> out(rows, std::vector<bool>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = m.at(r);
    if (!row.is_array() || row.size() != cols)
      throw ParseError(std::string("dimension mismatch: '") + key + "' row " +
                       std::to_string(r + 1) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = row.at(c);
      if (cell.is_number_integer() && (cell.get<long long>() == 0 || cell.get<long long>() == 1))
        out[r][c] = cell.get<long long>() == 1;
      else if (cell.is_boolean())
        out[r][c] = cell.get<bool>();
      else
        throw ParseError(std::string("illegal incidence value in '") + key + "' row " +
                         std::to_string(r + 1) + ", entry " + std::to_string(c + 1));
    }
  }
  return out;
}

json matrix_json(const FormalContext& ctx) {
  json rows = json::array();
  for (std::size_t o = 0; o < ctx.object_count(); ++o) {
    json row = json::array();
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) row.push_back(ctx.incident(o, a) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_json_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

FormalContext concatenate(const FormalContext& a, const FormalContext& b) {
  auto names = a.attribute_names();
  names.insert(names.end(), b.attribute_names().begin(), b.attribute_names().end());
  std::vector<std::vector<bool>> inc(a.object_count());
  for (std::size_t o = 0; o < a.object_count(); ++o) {
    for (std::size_t k = 0; k < a.attribute_count(); ++k) inc[o].push_back(a.incident(o, k));
    for (std::size_t k = 0; k < b.attribute_count(); ++k) inc[o].push_back(b.incident(o, k));
  }
  return FormalContext(a.object_names(), std::move(names), inc);
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : ContextError(describe_position(line, column) + what), line_(line), column_(column) {}

FormalContext::FormalContext(std::vector<std::string> object_names,
                             std::vector<std::string> attribute_names,
                             const std::vector<std::vector<bool>>& incidence)
    : objects_(std::move(object_names)), attributes_(std::move(attribute_names)) {
  if (objects_.empty()) throw ContextError("a context needs at least one object");
  if (attributes_.empty()) throw ContextError("a context needs at least one attribute");
  require_unique(objects_, "object");
  require_unique(attributes_, "attribute");
  if (incidence.size() != objects_.size())
    throw ContextError("incidence has " + std::to_string(incidence.size()) + " rows for " +
                       std::to_string(objects_.size()) + " objects");
  rows_.assign(objects_.size(), AttributeSet(attributes_.size()));
  columns_.assign(attributes_.size(), ObjectSet(objects_.size()));
  for (std::size_t o = 0; o < objects_.size(); ++o) {
    if (incidence[o].size() != attributes_.size())
      throw ContextError("incidence row " + std::to_string(o + 1) + " has " +
                         std::to_string(incidence[o].size()) + " columns for " +
                         std::to_string(attributes_.size()) + " attributes");
    for (std::size_t a = 0; a < attributes_.size(); ++a) {
      if (incidence[o][a]) {
        rows_[o].insert(a);
        columns_[a].insert(o);
      }
    }
  }
}

std::vector<std::vector<bool>> FormalContext::incidence() const {
  std::vector<std::vector<bool>> out(object_count(), std::vector<bool>(attribute_count()));
  for (std::size_t o = 0; o < object_count(); ++o)
    rows_[o].for_each([&](std::size_t a) { out[o][a] = true; });
  return out;
}

CompoundContext::CompoundContext(FormalContext a_block, FormalContext b_block, Flavor flavor)
    : a_(std::move(a_block)),
      b_(std::move(b_block)),
      flat_([this] {
        if (a_.object_names() != b_.object_names())
          throw ContextError("attribute blocks are defined over different object lists");
        std::unordered_set<std::string_view> a_names(a_.attribute_names().begin(),
                                                     a_.attribute_names().end());
        for (const auto& n : b_.attribute_names())
          if (a_names.count(n))
            throw ContextError("attribute name '" + n + "' appears in both blocks");
        return concatenate(a_, b_);
      }()),
      flavor_(flavor) {
  if (flavor_ == Flavor::ThreeWay) {
    if (a_.attribute_count() != b_.attribute_count())
      throw ContextError("three-way blocks must have the same number of attributes");
    for (std::size_t k = 0; k < a_.attribute_count(); ++k)
      if (a_.column(k) != b_.column(k).complement())
        throw ContextError("three-way block column '" + b_.attribute_names()[k] +
                           "' is not the negation of '" + a_.attribute_names()[k] + "'");
  }
}

FormalContext parse_context(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_context_json(text);
  return parse_cxt(text);
}

FormalContext parse_cxt(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.size() < 5) throw ParseError("malformed header: CXT needs at least five header lines", lines.size() + 1);
  if (lines[0] != "B") throw ParseError("malformed header: first line must be 'B'", 1);
  // Line 2 holds the optional context name in Burmeister files; its content is ignored.
  auto n_objects = parse_count(lines[2], 3, "object");
  auto n_attributes = parse_count(lines[3], 4, "attribute");
  if (!lines[4].empty()) throw ParseError("malformed header: line 5 must be blank", 5);

  std::size_t next = 5;
  auto take_names = [&](std::size_t n, const char* what) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k, ++next) {
      if (next >= lines.size())
        throw ParseError(std::string("dimension mismatch: missing ") + what + " name", next + 1);
      names.emplace_back(lines[next]);
    }
    return names;
  };
  auto objects = take_names(n_objects, "object");
  auto attributes = take_names(n_attributes, "attribute");

  std::vector<std::vector<bool>> incidence;
  for (std::size_t o = 0; o < n_objects; ++o, ++next) {
    if (next >= lines.size())
      throw ParseError("dimension mismatch: expected " + std::to_string(n_objects) +
                           " incidence rows, found " + std::to_string(o),
                       next + 1);
    auto row = lines[next];
    if (row.size() != n_attributes)
      throw ParseError("dimension mismatch: incidence row has " + std::to_string(row.size()) +
                           " cells, expected " + std::to_string(n_attributes),
                       next + 1);
    std::vector<bool> bits(n_attributes);
    for (std::size_t a = 0; a < n_attributes; ++a) {
      if (row[a] == 'X')
        bits[a] = true;
      else if (row[a] != '.')
        throw ParseError(std::string("illegal incidence character '") + row[a] + "'", next + 1, a + 1);
    }
    incidence.push_back(std::move(bits));
  }
  for (; next < lines.size(); ++next)
    if (!lines[next].empty())
      throw ParseError("dimension mismatch: unexpected content after incidence rows", next + 1);

  try {
    return FormalContext(std::move(objects), std::move(attributes), incidence);
  } catch (const ParseError&) {
    throw;
  } catch (const ContextError& e) {
    throw ParseError(e.what());
  }
}

FormalContext parse_context_json(std::string_view text) {
  auto doc = parse_json_document(text);
  if (!doc.is_object()) throw ParseError("context JSON must be an object");
  auto objects = string_array(doc, "objects");
  auto attributes = string_array(doc, "attributes");
  auto incidence = bit_matrix(doc, "incidence", objects.size(), attributes.size());
  try {
    return FormalContext(std::move(objects), std::move(attributes), incidence);
  } catch (const ContextError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_context(const FormalContext& ctx, ContextFormat format) {
  if (format == ContextFormat::Json) {
    json doc;
    doc["objects"] = ctx.object_names();
    doc["attributes"] = ctx.attribute_names();
    doc["incidence"] = matrix_json(ctx);
    return doc.dump() + "\n";
  }
  std::string out = "B\n\n";
  out += std::to_string(ctx.object_count()) + "\n";
  out += std::to_string(ctx.attribute_count()) + "\n\n";
  for (const auto& n : ctx.object_names()) out += n + "\n";
  for (const auto& n : ctx.attribute_names()) out += n + "\n";
  for (std::size_t o = 0; o < ctx.object_count(); ++o) {
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) out += ctx.incident(o, a) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

bool looks_like_compound_json(std::string_view text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string_view::npos || text[pos] != '{') return false;
  auto doc = parse_json_document(text);
  return doc.is_object() && doc.contains("a_attributes");
}

CompoundContext parse_compound_json(std::string_view text) {
  auto doc = parse_json_document(text);
  if (!doc.is_object()) throw ParseError("compound context JSON must be an object");
  auto objects = string_array(doc, "objects");
  auto a_names = string_array(doc, "a_attributes");
  auto b_names = string_array(doc, "b_attributes");
  auto a_inc = bit_matrix(doc, "a_incidence", objects.size(), a_names.size());
  auto b_inc = bit_matrix(doc, "b_incidence", objects.size(), b_names.size());
  if (!doc.contains("flavor") || !doc.at("flavor").is_string())
    throw ParseError("missing string 'flavor'");
  auto flavor_name = doc.at("flavor").get<std::string>();
  Flavor flavor;
  if (flavor_name == "three_way")
    flavor = Flavor::ThreeWay;
  else if (flavor_name == "common_necessary")
    flavor = Flavor::CommonNecessary;
  else
    throw ParseError("unknown flavor '" + flavor_name + "'");
  try {
    return CompoundContext(FormalContext(objects, std::move(a_names), a_inc),
                           FormalContext(objects, std::move(b_names), b_inc), flavor);
  } catch (const ParseError&) {
    throw;
  } catch (const ContextError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_compound_json(const CompoundContext& cctx) {
  json doc;
  doc["objects"] = cctx.object_names();
  doc["a_attributes"] = cctx.a_block().attribute_names();
  doc["b_attributes"] = cctx.b_block().attribute_names();
  doc["a_incidence"] = matrix_json(cctx.a_block());
  doc["b_incidence"] = matrix_json(cctx.b_block());
  doc["flavor"] = to_string(cctx.flavor());
  return doc.dump() + "\n";
}

FormalContext complement_context(const FormalContext& ctx, std::string_view prefix) {
  std::vector<std::string> names;
  names.reserve(ctx.attribute_count());
  for (const auto& n : ctx.attribute_names()) names.push_back(std::string(prefix) + n);
  auto inc = ctx.incidence();
  for (auto& row : inc) row.flip();
  return FormalContext(ctx.object_names(), std::move(names), inc);
}

CompoundContext appose_negation(const FormalContext& ctx, std::string_view prefix) {
  return CompoundContext(ctx, complement_context(ctx, prefix), Flavor::ThreeWay);
}

CompoundContext make_cn_context(const FormalContext& primary, const FormalContext& secondary) {
  if (primary.object_names() != secondary.object_names())
    throw ContextError("object universe mismatch between primary and secondary contexts");
  if (primary.attribute_names() == secondary.attribute_names()) {
    // The same table used for both blocks: keep the blocks apart by name.
    std::vector<std::string> names;
    for (const auto& n : secondary.attribute_names()) names.push_back(n + "'");
    return CompoundContext(primary, FormalContext(secondary.object_names(), std::move(names), secondary.incidence()),
                           Flavor::CommonNecessary);
  }
  return CompoundContext(primary, secondary, Flavor::CommonNecessary);
}

const char* to_string(Flavor flavor) {
  return flavor == Flavor::ThreeWay ? "three_way" : "common_necessary";
}

}  // namespace granule
