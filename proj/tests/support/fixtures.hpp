#pragma once

#include <fstream>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>

#include "granule/context.hpp"

#ifndef GRANULE_TEST_DATA
#error "GRANULE_TEST_DATA must point at tests/data"
#endif

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(GRANULE_TEST_DATA) + "/" + name; }

inline std::string slurp(const std::string& name) {
  std::ifstream in(path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline granule::FormalContext context(const std::string& name) { return granule::parse_context(slurp(name)); }

inline granule::CompoundContext table5() { return granule::parse_compound_json(slurp("table5.json")); }

inline granule::CompoundContext scores() {
  return granule::make_cn_context(context("scores_a.cxt"), context("scores_b.cxt"));
}

// 1-based positions, as the tables number their objects.
inline granule::ObjectSet objects(std::size_t universe, std::initializer_list<std::size_t> positions) {
  granule::ObjectSet s(universe);
  for (auto p : positions) s.insert(p - 1);
  return s;
}

template <class Tag>
granule::IndexSet<Tag> named(const std::vector<std::string>& names, std::initializer_list<const char*> wanted) {
  granule::IndexSet<Tag> s(names.size());
  for (const char* w : wanted) {
    bool found = false;
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k] == w) {
        s.insert(k);
        found = true;
      }
    if (!found) throw std::runtime_error(std::string("no such name ") + w);
  }
  return s;
}

inline granule::AttributeSet attrs(const granule::FormalContext& ctx, std::initializer_list<const char*> wanted) {
  return named<granule::AttributeTag>(ctx.attribute_names(), wanted);
}

inline granule::ObjectSet objs(const granule::FormalContext& ctx, std::initializer_list<const char*> wanted) {
  return named<granule::ObjectTag>(ctx.object_names(), wanted);
}

}  // namespace fixtures
