#include "arborpack/guard.hpp"

#include <cstdlib>

#include "arborpack/vertex_set.hpp"

namespace arborpack {

namespace {
constexpr int default_max_n = 20;
constexpr int search_max_n = 8;
constexpr int search_max_arcs = 14;
}  // namespace

int max_enumeration_vertices() {
  const char* env = std::getenv("ARBORPACK_MAX_N");
  if (!env || !*env) return default_max_n;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value <= 0) return default_max_n;
  if (value > VertexSet::max_vertices) value = VertexSet::max_vertices;
  return static_cast<int>(value);
}

void check_enumeration_size(int n, const char* what) {
  int limit = max_enumeration_vertices();
  if (n > limit) {
    throw SizeGuardError(std::string(what) + ": " + std::to_string(n) +
                         " vertices exceeds the enumeration ceiling " + std::to_string(limit) +
                         " (set ARBORPACK_MAX_N to raise it)");
  }
}

void check_search_size(int n, int arc_count, const char* what) {
  const char* env = std::getenv("ARBORPACK_MAX_N");
  if (env && *env) {
    check_enumeration_size(n, what);
    return;
  }
  if (n > search_max_n || arc_count > search_max_arcs) {
    throw SizeGuardError(std::string(what) + ": instance with " + std::to_string(n) +
                         " vertices / " + std::to_string(arc_count) +
                         " arcs exceeds the exhaustive-search ceiling (" +
                         std::to_string(search_max_n) + " vertices, " +
                         std::to_string(search_max_arcs) +
                         " arcs; set ARBORPACK_MAX_N to override)");
  }
}

}  // namespace arborpack
