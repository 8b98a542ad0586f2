#pragma once

#include <stdexcept>
#include <string>

namespace arborpack {

// Thrown when an enumeration-based operation is asked for an instance larger
// than the configured ceiling.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Ceiling on the vertex count for operations that enumerate subpartitions or
// vertex subsets. Defaults to 20; the ARBORPACK_MAX_N environment variable
// overrides it (clamped to the VertexSet capacity).
int max_enumeration_vertices();

void check_enumeration_size(int n, const char* what);

// Tighter ceiling used by the exhaustive packing searches.
void check_search_size(int n, int arc_count, const char* what);

}  // namespace arborpack
