#include "wfusion/walg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace wfusion::walg {

namespace {

long gcd_l(long a, long b)
{
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

ringkit::FusionRing trivial_ring()
{
    ringkit::FusionRing R;
    R.labels = {"1"};
    R.unit = 0;
    R.pic = {0};
    R.constants[{0, 0}] = {{0, Int(1)}};
    R.h = {Rat(0)};
    return R;
}

} // namespace

WModel make_model(Family family, long n, int r)
{
    WModel m;
    m.family = family;
    m.n = n;
    m.r = r;
    if (r < 0 || n < 0)
        throw ValidationError("requires n >= 0 and r >= 0");
    if (r == 0) {
        // W(n, 0) is the one dimensional vertex algebra.
        m.edge = true;
        m.modulus = 1;
        m.step = 0;
        m.central_charge = 0;
    } else if (r == 1) {
        // W(2m, 1) is a rank one lattice vertex (super)algebra.
        if (n < 2 || n % 2 != 0)
            throw ValidationError("requires even n >= 2 when r = 1 (gcd(n-1, r+1) = 1)");
        m.edge = true;
        m.modulus = family == Family::Subregular ? n : n + 1;
        m.step = 0;
        m.central_charge = 1;
    } else {
        if (n < 2)
            throw ValidationError("requires n >= 2 when r >= 2");
        if (gcd_l(n - 1, r + 1) != 1)
            throw ValidationError("requires gcd(n-1, r+1) = 1");
        m.modulus = family == Family::Subregular ? n * r : (n + r) * r;
        m.step = family == Family::Subregular ? n : n + r;
        // c(W_pr(r, n)) + 1 for the Heisenberg direction.
        Rat cpr = Rat(r - 1) * (Rat(1) - Rat(static_cast<long>(r) * (n - 1) * (n - 1), n + r));
        m.central_charge = cpr + 1;
    }
    if (n >= 2) {
        if (family == Family::Subregular)
            m.level = -Rat(n) + Rat(n + r, n - 1);
        else
            m.level = -Rat(n - 1) + Rat(n - 1, n + r);
    }
    m.eps_plus = n > 0 ? Rat(r, n) : Rat(0);
    m.eps_minus = Rat(r, n + r);
    return m;
}

WLabel canonical_label(const WModel& model, const WLabel& x)
{
    long M = model.modulus;
    long orbit = std::max(1, model.r);
    long shift = model.family == Family::Subregular ? model.step : model.step;
    WLabel best{x.lambda, ((x.a % M) + M) % M};
    if (model.edge)
        return best;
    WLabel cur = best;
    for (long k = 1; k < orbit; ++k) {
        cur = WLabel{rootdata::sigma(cur.lambda), ((cur.a + shift) % M + M) % M};
        if (std::tie(cur.a, cur.lambda.labels) < std::tie(best.a, best.lambda.labels))
            best = cur;
    }
    return best;
}

ringkit::FusionRing affine_fusion_ring(int r, long n, bool prinw_weights)
{
    using rootdata::AffineWeight;
    ringkit::FusionRing R;
    if (r == 1) {
        R = trivial_ring();
        R.labels = {"[" + std::to_string(n) + "]"};
        return R;
    }
    auto basis = rootdata::dominant_weights(r, n);
    std::sort(basis.begin(), basis.end());
    const int B = static_cast<int>(basis.size());
    auto idx = [&](const AffineWeight& w) {
        auto it = std::lower_bound(basis.begin(), basis.end(), w);
        return static_cast<int>(it - basis.begin());
    };
    for (const auto& w : basis) {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < r; ++i)
            os << (i ? "," : "") << w.labels[i];
        os << "]";
        R.labels.push_back(os.str());
    }
    std::vector<long> vac(r, 0);
    vac[0] = n;
    R.unit = idx(AffineWeight{vac});
    for (int i = 0; i < r; ++i)
        R.pic.push_back(idx(rootdata::sigma(AffineWeight{vac}, i)));
    for (int i = 0; i < B; ++i)
        for (int j = i; j < B; ++j) {
            std::map<int, Int> out;
            for (const auto& [nu, c] : fusion::affine_fusion(basis[i], basis[j], n))
                out[idx(nu)] = c;
            R.constants[{i, j}] = std::move(out);
        }
    for (const auto& w : basis)
        R.h.push_back(prinw_weights ? rootdata::conformal_dim_prinw(w, n)
                                    : rootdata::conformal_dim_affine(w, n));
    return R;
}

namespace {

// Shared construction: orbit ring of pairs over a cyclic extension.
WRing build_orbit_ring(const WModel& model, const ringkit::FusionRing& base,
                       const std::vector<AffineWeight>& base_weights, long step_signed)
{
    WRing wr;
    wr.model = model;

    ringkit::ExtensionDatum datum;
    datum.base = base;
    datum.disc = ringkit::DiscriminantForm{model.modulus};
    datum.step = ((step_signed % model.modulus) + model.modulus) % model.modulus;
    datum.current = model.edge ? base.unit : base.pic[1];
    wr.ext = ringkit::extend(datum);
    wr.ring = wr.ext.ring;

    for (const auto& [x, a] : wr.ext.rep) {
        AffineWeight lam = model.edge ? AffineWeight{{model.n}} : base_weights[x];
        wr.basis.push_back(WLabel{lam, a});
    }
    return wr;
}

} // namespace

WRing fusion_ring(const WModel& model)
{
    if (model.edge) {
        std::vector<AffineWeight> none;
        return build_orbit_ring(model, trivial_ring(), none, 0);
    }
    auto base = affine_fusion_ring(model.r, model.n, true);
    auto weights = rootdata::dominant_weights(model.r, model.n);
    std::sort(weights.begin(), weights.end());
    long step = model.family == Family::Subregular ? model.step : model.step;
    return build_orbit_ring(model, base, weights, step);
}

int WRing::index_of(const WLabel& x) const
{
    WLabel c = canonical_label(model, x);
    for (int i = 0; i < static_cast<int>(basis.size()); ++i)
        if (basis[i] == c)
            return i;
    throw std::invalid_argument("WRing::index_of: label is not a simple module");
}

std::vector<WLabel> simple_modules(const WModel& model)
{
    return fusion_ring(model).basis;
}

std::vector<std::vector<std::complex<double>>> smatrix(const WRing& wr)
{
    using Cplx = std::complex<double>;
    const auto& model = wr.model;
    const int B = static_cast<int>(wr.basis.size());
    const double M = static_cast<double>(model.modulus);
    const double twopi = 2.0 * std::numbers::pi;
    std::vector<std::vector<Cplx>> S(B, std::vector<Cplx>(B));
    if (model.edge) {
        for (int i = 0; i < B; ++i)
            for (int j = 0; j < B; ++j)
                S[i][j] = std::exp(Cplx(0.0, -twopi * wr.basis[i].a * wr.basis[j].a / M)) /
                          std::sqrt(M);
        return S;
    }
    auto sw = fusion::smatrix_affine(model.r, model.n);
    const double scale = std::sqrt(static_cast<double>(model.r) *
                                   static_cast<double>(model.r) / M);
    for (int i = 0; i < B; ++i) {
        int xi = sw.index_of(wr.basis[i].lambda);
        for (int j = 0; j < B; ++j) {
            int xj = sw.index_of(wr.basis[j].lambda);
            // The lattice factor enters with the opposite orientation to
            // S^W; this is what makes the entry independent of the chosen
            // orbit representatives (sigma twists S^W by e^{2pi i pi(mu)/r}).
            Cplx phase = std::exp(
                Cplx(0.0, -twopi * static_cast<double>(wr.basis[i].a) *
                              static_cast<double>(wr.basis[j].a) / M));
            S[i][j] = phase * scale * sw.S[xi][xj];
        }
    }
    return S;
}

std::optional<WLabel> hrel_plus(long n, int r, const WLabel& x, long xi)
{
    auto sb = make_model(Family::Subregular, n, r);
    auto spr = make_model(Family::PrincipalSuper, n, r);
    long a = ((x.a % sb.modulus) + sb.modulus) % sb.modulus;
    if (((xi - a) % n + n) % n != 0)
        return std::nullopt;
    long t = (xi - a) / n;
    // ((n+r) a - r xi) / n = a - r t
    long ap = a - static_cast<long>(r) * t;
    return canonical_label(spr, WLabel{x.lambda, ((ap % spr.modulus) + spr.modulus) % spr.modulus});
}

std::optional<WLabel> hrel_minus(long n, int r, const WLabel& x, long xi)
{
    auto sb = make_model(Family::Subregular, n, r);
    auto spr = make_model(Family::PrincipalSuper, n, r);
    long a = ((x.a % spr.modulus) + spr.modulus) % spr.modulus;
    if (((xi - a) % (n + r) + (n + r)) % (n + r) != 0)
        return std::nullopt;
    long s = (xi - a) / (n + r);
    // (n a + r xi) / (n+r) = a + r s
    long ap = a + static_cast<long>(r) * s;
    return canonical_label(sb, WLabel{x.lambda, ((ap % sb.modulus) + sb.modulus) % sb.modulus});
}

long check_monoidality(long n, int r)
{
    auto sb = fusion_ring(make_model(Family::Subregular, n, r));
    auto spr = fusion_ring(make_model(Family::PrincipalSuper, n, r));
    const long xirange = n * (n + r);
    long checked = 0;
    for (int i = 0; i < static_cast<int>(sb.basis.size()); ++i)
        for (int j = 0; j < static_cast<int>(sb.basis.size()); ++j)
            for (long xi1 = 0; xi1 < xirange; ++xi1)
                for (long xi2 = 0; xi2 < xirange; ++xi2) {
                    auto im1 = hrel_plus(n, r, sb.basis[i], xi1);
                    auto im2 = hrel_plus(n, r, sb.basis[j], xi2);
                    if (!im1 || !im2)
                        continue; // the image side vanishes identically
                    // map then fuse
                    std::map<int, Int> lhs =
                        spr.ring.product(spr.index_of(*im1), spr.index_of(*im2));
                    // fuse then map
                    std::map<int, Int> rhs;
                    for (const auto& [z, c] : sb.ring.product(i, j)) {
                        auto imz = hrel_plus(n, r, sb.basis[z], xi1 + xi2);
                        if (!imz)
                            throw std::logic_error(
                                "check_monoidality: sum residue unexpectedly inadmissible");
                        rhs[spr.index_of(*imz)] += c;
                    }
                    if (lhs != rhs)
                        throw std::logic_error("check_monoidality: images disagree");
                    ++checked;
                }
    return checked;
}

WRing spr_alternative_ring(long n, int r)
{
    // Alternative labels: dominant sl_n weights at level r, coset labels
    // mod n(n+r), locality pi(lambda) = -a mod n, orbit shift -(n+r).
    auto spr = make_model(Family::PrincipalSuper, n, r);
    WModel alt = spr;
    alt.r = static_cast<int>(n);
    alt.n = r;
    alt.modulus = n * (n + r);
    alt.step = -(n + r);

    auto base = affine_fusion_ring(static_cast<int>(n), r, true);
    auto weights = rootdata::dominant_weights(static_cast<int>(n), r);
    std::sort(weights.begin(), weights.end());
    return build_orbit_ring(alt, base, weights, -(n + r));
}

std::string label_str(const WLabel& x)
{
    std::ostringstream os;
    os << "([";
    for (std::size_t i = 0; i < x.lambda.labels.size(); ++i)
        os << (i ? "," : "") << x.lambda.labels[i];
    os << "]," << x.a << ")";
    return os.str();
}

} // namespace wfusion::walg
