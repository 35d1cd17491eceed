#pragma once

// SVG picture of the AR quiver of C_n with a finite half marked.

#include "tube/torsion.hpp"

#include <string>

namespace tube {

/// Levels 1..n+1 as rows (level 1 at the bottom), one fundamental domain of
/// columns plus the first column repeated on the right. Vertices of the
/// finite half are boxed and each wing is outlined by dotted lines from its
/// top down to the mouth. Output depends only on the pair.
std::string render_svg(const TorsionPair& pair);

/// Vertex label of the arc (i, j): the residues mod n, written as two
/// digits when n <= 10 and as "i,j" otherwise.
std::string vertex_label(const Arc& a, int n);

}  // namespace tube
