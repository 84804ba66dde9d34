#include "wfusion/levelrank.hpp"

#include "wfusion/walg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wfusion::levelrank {

using rootdata::AffineWeight;

ExtendedSide extended_side(long n, long m)
{
    // Base: K(L_n(sl_m)) with affine conformal weights for monodromy.
    auto base = walg::affine_fusion_ring(static_cast<int>(m), n, false);
    auto weights = rootdata::dominant_weights(static_cast<int>(m), n);
    std::sort(weights.begin(), weights.end());

    ringkit::ExtensionDatum datum;
    datum.base = base;
    datum.disc = ringkit::DiscriminantForm{n * m};
    datum.step = n;
    datum.current = m >= 2 ? base.pic[1] : base.unit;
    auto ext = ringkit::extend(datum);

    ExtendedSide out;
    out.ring = ext.ring;
    for (const auto& [x, a] : ext.rep)
        out.basis.emplace_back(m >= 2 ? weights[x] : AffineWeight{{n}}, a);
    return out;
}

std::vector<int> verify_duality(long n, long m)
{
    auto A = walg::affine_fusion_ring(static_cast<int>(n), m, false);
    auto lams = rootdata::dominant_weights(static_cast<int>(n), m);
    std::sort(lams.begin(), lams.end());
    auto E = extended_side(n, m);

    if (A.size() != E.ring.size())
        throw std::logic_error("verify_duality: cardinality mismatch");

    // Canonical representative on the extended side.
    auto canon = [&](AffineWeight lam, long a) {
        long M = n * m;
        a = ((a % M) + M) % M;
        std::pair<std::vector<long>, long> best{lam.labels, a};
        AffineWeight cur = lam;
        long ca = a;
        for (long k = 1; k < m; ++k) {
            cur = rootdata::sigma(cur);
            ca = (ca + n) % M;
            if (std::tie(ca, cur.labels) < std::tie(best.second, best.first))
                best = {cur.labels, ca};
        }
        return std::pair{AffineWeight{best.first}, best.second};
    };

    std::vector<int> p(A.size(), -1);
    for (std::size_t i = 0; i < lams.size(); ++i) {
        auto t = rootdata::transpose_weight(lams[i]);
        auto key = canon(t, rootdata::box_count(lams[i]));
        auto it = std::find(E.basis.begin(), E.basis.end(),
                            std::pair{key.first, key.second});
        if (it == E.basis.end())
            throw std::logic_error("verify_duality: transposed label missing");
        p[i] = static_cast<int>(it - E.basis.begin());
    }
    if (!ringkit::is_isomorphism(A, E.ring, p))
        throw std::logic_error("verify_duality: transposition is not a ring isomorphism");
    return p;
}

long branching_label_check(long n, long m)
{
    auto lams = rootdata::dominant_weights(static_cast<int>(n), m);
    long checked = 0;
    for (long a = 0; a < n * m; ++a)
        for (const auto& lam : lams) {
            if (rootdata::pi_pq(lam) % n != (a % n))
                continue;
            long boxes = rootdata::box_count(lam);
            if (((a - boxes) % n + n) % n != 0)
                throw std::logic_error("branching_label_check: shift not integral");
            ++checked;
        }
    long expected = static_cast<long>(lams.size()) * m;
    if (checked != expected)
        throw std::logic_error("branching_label_check: wrong number of admissible pairs");
    return checked;
}

} // namespace wfusion::levelrank
