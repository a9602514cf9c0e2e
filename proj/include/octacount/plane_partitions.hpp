#pragma once

#include "octacount/bigint.hpp"

namespace octa {

// Number of plane partitions in a p x q box with entries at most r
// (equivalently, lozenge tilings of the hexagon with sides p, q, r):
// the MacMahon product over 1<=i<=p, 1<=j<=q, 1<=k<=r of
// (i+j+k-1)/(i+j+k-2), evaluated exactly. Symmetric in p, q, r.
BigNat box_plane_partitions(int p, int q, int r);

}  // namespace octa
