#include "wfusion/qchar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wfusion::qchar {

void QSeries::add_term(const Rat& qe, const Rat& ze, const Rat& c)
{
    if (qe >= cap || c == 0)
        return;
    terms[qe][ze] += c;
}

void QSeries::cleanup()
{
    for (auto it = terms.begin(); it != terms.end();) {
        for (auto jt = it->second.begin(); jt != it->second.end();)
            jt = jt->second == 0 ? it->second.erase(jt) : std::next(jt);
        it = it->second.empty() ? terms.erase(it) : std::next(it);
    }
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    cap = std::min(cap, o.cap);
    offset = std::min(offset, o.offset);
    for (auto it = terms.begin(); it != terms.end();)
        it = it->first >= cap ? terms.erase(it) : std::next(it);
    for (const auto& [qe, zp] : o.terms) {
        if (qe >= cap)
            continue;
        for (const auto& [ze, c] : zp)
            terms[qe][ze] += c;
    }
    cleanup();
    return *this;
}

QSeries QSeries::operator*(const QSeries& o) const
{
    QSeries out;
    out.offset = offset + o.offset;
    out.cap = std::min(cap + o.offset, o.cap + offset);
    for (const auto& [qa, za] : terms) {
        for (const auto& [qb, zb] : o.terms) {
            Rat qe = qa + qb;
            if (qe >= out.cap)
                continue;
            for (const auto& [ea, ca] : za)
                for (const auto& [eb, cb] : zb)
                    out.terms[qe][ea + eb] += ca * cb;
        }
    }
    out.cleanup();
    return out;
}

QSeries QSeries::scaled(const Rat& c) const
{
    QSeries out(*this);
    for (auto& [qe, zp] : out.terms)
        for (auto& [ze, v] : zp)
            v *= c;
    out.cleanup();
    return out;
}

QSeries QSeries::shifted(const Rat& dq, const Rat& dz) const
{
    QSeries out;
    out.offset = offset + dq;
    out.cap = cap + dq;
    for (const auto& [qe, zp] : terms)
        for (const auto& [ze, c] : zp)
            out.terms[qe + dq][ze + dz] += c;
    return out;
}

QSeries QSeries::z_component(const Rat& ze) const
{
    QSeries out;
    out.offset = offset;
    out.cap = cap;
    for (const auto& [qe, zp] : terms) {
        auto it = zp.find(ze);
        if (it != zp.end() && it->second != 0)
            out.terms[qe][Rat(0)] = it->second;
    }
    return out;
}

std::vector<Rat> QSeries::z_support() const
{
    std::vector<Rat> out;
    for (const auto& [qe, zp] : terms)
        for (const auto& [ze, c] : zp)
            if (c != 0 && std::find(out.begin(), out.end(), ze) == out.end())
                out.push_back(ze);
    std::sort(out.begin(), out.end());
    return out;
}

bool QSeries::is_zero() const
{
    for (const auto& [qe, zp] : terms)
        for (const auto& [ze, c] : zp)
            if (c != 0)
                return false;
    return true;
}

std::string QSeries::str(int max_terms) const
{
    std::ostringstream os;
    int shown = 0;
    for (const auto& [qe, zp] : terms) {
        for (const auto& [ze, c] : zp) {
            if (c == 0)
                continue;
            if (shown++)
                os << " + ";
            if (shown > max_terms) {
                os << "...";
                return os.str();
            }
            os << rat_str(c) << "*q^(" << rat_str(qe) << ")";
            if (ze != 0)
                os << "*z^(" << rat_str(ze) << ")";
        }
    }
    if (!shown)
        os << "0";
    os << "  [O(q^" << rat_str(cap) << ")]";
    return os.str();
}

bool agree_below(const QSeries& a, const QSeries& b, const Rat& upto)
{
    Rat lim = std::min({a.cap, b.cap, upto});
    auto collect = [&](const QSeries& s) {
        std::map<Rat, ZPoly> out;
        for (const auto& [qe, zp] : s.terms) {
            if (qe >= lim)
                continue;
            for (const auto& [ze, c] : zp)
                if (c != 0)
                    out[qe][ze] = c;
        }
        return out;
    };
    return collect(a) == collect(b);
}

QSeries eta_power(int p, long N)
{
    // Integer-exponent part first.
    std::map<long, Rat> f{{0, Rat(1)}};
    auto mul_poly = [&](const std::map<long, Rat>& g) {
        std::map<long, Rat> out;
        for (const auto& [e1, c1] : f)
            for (const auto& [e2, c2] : g) {
                if (e1 + e2 >= N)
                    continue;
                out[e1 + e2] += c1 * c2;
            }
        f = std::move(out);
    };
    int ap = p < 0 ? -p : p;
    for (long k = 1; k < N; ++k) {
        std::map<long, Rat> factor;
        if (p > 0) {
            factor[0] = 1;
            factor[k] = -1;
        } else {
            for (long j = 0; j * k < N; ++j)
                factor[j * k] = 1;
        }
        for (int t = 0; t < ap; ++t)
            mul_poly(factor);
    }
    QSeries out;
    out.offset = Rat(p, 24);
    out.cap = out.offset + N;
    for (const auto& [e, c] : f)
        out.add_term(out.offset + e, Rat(0), c);
    return out;
}

QSeries theta_progression(const Rat& a0, const Rat& step, const Rat& qden,
                          const Rat& zden, long N)
{
    if (step <= 0 || qden <= 0)
        throw std::invalid_argument("theta_progression: need positive step and qden");
    auto expo = [&](const Rat& x) -> Rat { return x * x / (2 * qden); };
    // Smallest exponent along the progression.
    Rat kstar = -a0 / step;
    Int k0 = rat_floor(kstar);
    Rat emin = expo(a0 + Rat(k0) * step);
    emin = std::min(emin, expo(a0 + Rat(k0 + 1) * step));

    QSeries out;
    out.offset = emin;
    out.cap = emin + N;
    for (int dir : {+1, -1}) {
        Int k = dir > 0 ? k0 + 1 : k0;
        while (true) {
            Rat x = a0 + Rat(k) * step;
            Rat e = expo(x);
            if (e >= out.cap) {
                // Beyond the vertex the exponent is monotone.
                if ((dir > 0 && Rat(k) > kstar) || (dir < 0 && Rat(k) < kstar))
                    break;
            } else {
                out.add_term(e, zden == 0 ? Rat(0) : x / zden, Rat(1));
            }
            k += dir;
        }
    }
    return out;
}

QSeries fkw_numerator(const AffineWeight& lambda, long n, long i, long N)
{
    const int r = lambda.rank();
    const long kappa = n + r;
    if (lambda.level() != n)
        throw std::invalid_argument("fkw_numerator: weight not at level n");

    // Traceless coordinates of the finite part of sigma^i(lambda) + rho.
    auto coords = [&](const AffineWeight& w) {
        std::vector<Rat> t(r, Rat(0));
        for (int j = r - 2; j >= 0; --j)
            t[j] = t[j + 1] + (w.labels[j + 1] + 1);
        Rat mean = 0;
        for (const auto& x : t)
            mean += x;
        mean /= r;
        for (auto& x : t)
            x -= mean;
        return t;
    };
    std::vector<Rat> nu = coords(rootdata::sigma(lambda, i));
    std::vector<Rat> rho(r);
    for (int j = 0; j < r; ++j)
        rho[j] = Rat(r - 1, 2) - j;

    // Permutations with signs.
    std::vector<int> perm(r);
    for (int j = 0; j < r; ++j)
        perm[j] = j;
    std::vector<std::pair<std::vector<int>, int>> perms;
    do {
        int inv = 0;
        for (int x = 0; x < r; ++x)
            for (int y = x + 1; y < r; ++y)
                if (perm[x] > perm[y])
                    ++inv;
        perms.emplace_back(perm, (inv & 1) ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    const Rat denom = Rat(2) * kappa * (1 + r);
    auto term_exponent = [&](const std::vector<int>& u, const std::vector<Rat>& beta) {
        Rat s = 0;
        for (int j = 0; j < r; ++j) {
            Rat x = Rat(1 + r) * (nu[u[j]] + Rat(kappa) * beta[j]) - Rat(kappa) * rho[j];
            s += x * x;
        }
        return s / denom;
    };

    // Seed the truncation window from the untranslated terms; the true
    // minimum can only be lower, so the final cap (min + N) is never above
    // the enumeration cap and the shell sweep stays complete.
    Rat emin;
    {
        std::vector<Rat> beta(r, Rat(0));
        bool have = false;
        for (const auto& [u, sgn] : perms) {
            Rat e = term_exponent(u, beta);
            if (!have || e < emin) {
                emin = e;
                have = true;
            }
        }
    }
    const Rat cap0 = emin + N;

    std::map<Rat, Rat> acc;
    std::vector<Rat> beta(r, Rat(0));
    std::vector<long> b(r - 1, 0);
    int empty_shells = 0;
    for (long R = 0;; ++R) {
        bool shell_hit = false;
        auto visit = [&](auto&& self, int pos, long maxabs) -> void {
            if (pos == r - 1) {
                if (R > 0 && maxabs != R)
                    return;
                long last = 0;
                for (long x : b)
                    last -= x;
                for (int j = 0; j < r - 1; ++j)
                    beta[j] = b[j];
                beta[r - 1] = last;
                for (const auto& [u, sgn] : perms) {
                    Rat e = term_exponent(u, beta);
                    if (e < emin)
                        emin = e;
                    if (e < cap0) {
                        acc[e] += sgn;
                        shell_hit = true;
                    }
                }
                return;
            }
            for (long x = -R; x <= R; ++x) {
                b[pos] = x;
                self(self, pos + 1, std::max(maxabs, x < 0 ? -x : x));
            }
        };
        visit(visit, 0, 0);
        // The form is positive definite, so exponents grow with the shell
        // radius; two consecutive silent shells end the sweep.
        empty_shells = (R > 0 && !shell_hit) ? empty_shells + 1 : 0;
        if (empty_shells >= 2)
            break;
    }

    QSeries out;
    out.offset = emin;
    out.cap = emin + N;
    for (const auto& [e, c] : acc)
        out.add_term(e, Rat(0), c);
    return out;
}

QSeries char_prinw(const AffineWeight& lambda, long n, long N)
{
    const int r = lambda.rank();
    return fkw_numerator(lambda, n, 0, N) * eta_power(-(r - 1), N);
}

namespace {

QSeries char_family(const AffineWeight& lambda, long a, long n, long theta_mod,
                    long zden, long N)
{
    const int r = lambda.rank();
    QSeries etainv = eta_power(-r, N);
    QSeries out;
    bool first = true;
    for (long i = 0; i < r; ++i) {
        QSeries num = fkw_numerator(lambda, n, i, N);
        QSeries th = theta_progression(Rat(a + zden * i), Rat(theta_mod), Rat(theta_mod),
                                       Rat(zden), N);
        QSeries part = num * th * etainv;
        if (first) {
            out = part;
            first = false;
        } else {
            out += part;
        }
    }
    return out;
}

} // namespace

QSeries char_sb(const AffineWeight& lambda, long a, long n, long N)
{
    const int r = lambda.rank();
    return char_family(lambda, a, n, n * r, n, N);
}

QSeries char_spr(const AffineWeight& lambda, long a, long n, long N)
{
    const int r = lambda.rank();
    return char_family(lambda, a, n, (n + r) * r, n + r, N);
}

QSeries relcoh_character(const QSeries& chM, const Rat& eps_src, const Rat& eps_dst,
                         const Rat& xi0, long N)
{
    QSeries stripped = chM * eta_power(1, N);
    Rat ratio = eps_dst / eps_src;

    QSeries out;
    out.cap = stripped.cap;
    out.offset = stripped.offset;
    bool selected = false;
    for (const Rat& mu : stripped.z_support()) {
        if (!is_integer(mu - xi0))
            continue;
        selected = true;
        QSeries b = stripped.z_component(mu).shifted(-mu * mu / (2 * eps_src), Rat(0));
        for (const auto& [qe, zp] : b.terms)
            for (const auto& [ze, c] : zp)
                if (!is_integer(c) || c < 0)
                    throw std::runtime_error(
                        "relcoh_character: input is not of branching form");
        Rat nuexp = mu - xi0 * (Rat(1) - ratio);
        out += b.shifted(nuexp * nuexp / (2 * eps_dst), nuexp);
    }
    if (!selected) {
        QSeries zero;
        zero.cap = stripped.cap;
        zero.offset = stripped.offset;
        return zero;
    }
    return out * eta_power(-1, N);
}

} // namespace wfusion::qchar
