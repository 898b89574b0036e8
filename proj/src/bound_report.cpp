#include "fatpoints/bounds.hpp"
#include "fatpoints/cohomology.hpp"

namespace fatpoints {

namespace {
std::int64_t clamp1(std::int64_t v) { return v < 1 ? 1 : v; }
}

BoundReport bound_report(const FatPointScheme& Z) {
    BoundReport r;
    r.prime = Z.field.p();
    r.n = Z.n;
    r.s = Z.s();
    r.weight = Z.weight();
    r.measured_reg = regularity_index(Z);
    if (Z.n == 2) r.segre_p2 = clamp1(segre_bound_p2(Z.mults));
    if (r.weight >= 2) r.fulton = clamp1(fulton_bound(Z.mults));
    if (Z.n >= 2 && r.s >= 1) r.segre_pn = clamp1(segre_bound_pn(Z.n, Z.mults));
    if (r.s >= 2 && r.s <= 16)
        r.generalized_segre = clamp1(generalized_segre_bound(Z));
    if (r.s >= Z.n + 3) r.bdp = clamp1(bdp_bound(Z.n, Z.mults));
    return r;
}

}  // namespace fatpoints
