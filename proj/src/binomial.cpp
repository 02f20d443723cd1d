#include "monlef/binomial.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "monlef/errors.hpp"
#include "monlef/util.hpp"

namespace monlef {

namespace {

using TermMap = std::map<Monomial, Rational, GrlexGreater>;

Polynomial from_map(const TermMap& m) {
    std::vector<Term> terms;
    terms.reserve(m.size());
    for (const auto& [mono, coeff] : m)
        if (coeff != 0)
            terms.push_back({coeff, mono});
    return Polynomial(std::move(terms));
}

} // namespace

Polynomial::Polynomial(std::vector<Term> terms) {
    TermMap acc;
    int n = -1;
    for (Term& t : terms) {
        if (n < 0)
            n = t.mono.vars();
        else if (t.mono.vars() != n)
            throw std::invalid_argument("terms live in different rings");
        acc[t.mono] += t.coeff;
    }
    for (auto& [mono, coeff] : acc)
        if (coeff != 0)
            terms_.push_back({coeff, mono});
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
    return Polynomial({Term{c, m}});
}

const Term& Polynomial::leading() const {
    if (terms_.empty())
        throw std::logic_error("the zero polynomial has no leading term");
    return terms_.front();
}

int Polynomial::vars() const {
    return terms_.empty() ? 0 : terms_.front().mono.vars();
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0)
        return Polynomial();
    Polynomial out(*this);
    for (Term& t : out.terms_)
        t.coeff *= c;
    return out;
}

Polynomial Polynomial::times(const Monomial& m) const {
    Polynomial out(*this);
    for (Term& t : out.terms_)
        t.mono = t.mono * m;
    return out;
}

void Polynomial::add_scaled(const Polynomial& p, const Rational& c,
                            const Monomial& shift) {
    TermMap acc;
    for (const Term& t : terms_)
        acc[t.mono] = t.coeff;
    for (const Term& t : p.terms_)
        acc[t.mono * shift] += t.coeff * c;
    *this = from_map(acc);
}

std::string render_polynomial(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (const Term& t : p.terms()) {
        Rational c = t.coeff;
        if (out.empty()) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        if (t.mono.is_one())
            out += c.get_str();
        else {
            if (c != 1)
                out += c.get_str() + "*";
            out += render_monomial(t.mono);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << render_polynomial(p);
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& gens) {
    TermMap work;
    for (const Term& t : p.terms())
        work[t.mono] = t.coeff;
    TermMap done;
    while (!work.empty()) {
        auto it = work.begin(); // order-largest remaining term
        Monomial mono = it->first;
        Rational coeff = it->second;
        work.erase(it);
        if (coeff == 0)
            continue;
        const Polynomial* reducer = nullptr;
        for (const Polynomial& g : gens) {
            if (!g.is_zero() && g.leading().mono.divides(mono)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            done[mono] += coeff;
            continue;
        }
        // Cancel the term against the reducer; the tail lands strictly lower.
        Monomial shift = mono.divide(reducer->leading().mono);
        Rational factor = coeff / reducer->leading().coeff;
        auto tail = reducer->terms().begin();
        for (++tail; tail != reducer->terms().end(); ++tail)
            work[tail->mono * shift] -= factor * tail->coeff;
    }
    return from_map(done);
}

Polynomial reduce(const Polynomial& p, const BinomialFamily& f) {
    return reduce(p, f.gens);
}

bool s_pair_check(const std::vector<Polynomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const Polynomial& f = gens[i];
            const Polynomial& g = gens[j];
            if (f.is_zero() || g.is_zero())
                continue;
            Monomial l = Monomial::lcm(f.leading().mono, g.leading().mono);
            Polynomial s = f.scaled(Rational(1) / f.leading().coeff)
                               .times(l.divide(f.leading().mono));
            s.add_scaled(g, Rational(-1) / g.leading().coeff,
                         l.divide(g.leading().mono));
            if (!reduce(s, gens).is_zero())
                return false;
        }
    }
    return true;
}

bool s_pair_check(const BinomialFamily& f) {
    return s_pair_check(f.gens);
}

namespace {

MonomialIdeal leading_ideal(const std::vector<Polynomial>& gens, int n) {
    std::vector<Monomial> lts;
    for (const Polynomial& g : gens)
        if (!g.is_zero())
            lts.push_back(g.leading().mono);
    return MonomialIdeal(n, std::move(lts));
}

} // namespace

MonomialIdeal initial_ideal(const std::vector<Polynomial>& gens, int n) {
    if (!s_pair_check(gens))
        throw std::invalid_argument(
            "generators are not a Groebner basis; the leading-term ideal "
            "would not be the initial ideal");
    return leading_ideal(gens, n);
}

MonomialIdeal initial_ideal(const BinomialFamily& f) {
    return initial_ideal(f.gens, f.n);
}

namespace {

void check_family_input(const std::vector<Exponent>& d,
                        const std::vector<Exponent>& alpha) {
    if (d.size() < 2 || d.size() != alpha.size())
        throw std::invalid_argument("need matching d and alpha with n >= 2");
    Exponent tail = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 1)
            throw std::invalid_argument("need d_i >= 1");
        if (alpha[i] < 0 || alpha[i] > d[i])
            throw std::invalid_argument("need 0 <= alpha_i <= d_i");
        if (i >= 1)
            tail = checked_add(tail, alpha[i]);
    }
    if (d[0] != tail)
        throw std::invalid_argument("need d_1 = alpha_2 + ... + alpha_n");
}

// Keeps the extra (product) generators that are genuinely needed: drops any
// that another kept monomial divides, and any whose normal form modulo the
// binomial and the pure powers vanishes.
std::vector<Monomial> prune_extras(const Polynomial& binomial,
                                   const std::vector<Monomial>& pures,
                                   std::vector<Monomial> extras, int n) {
    std::sort(extras.begin(), extras.end(), GrlexGreater{});
    extras.erase(std::unique(extras.begin(), extras.end()), extras.end());
    MonomialIdeal reference(n, [&] {
        std::vector<Monomial> all = pures;
        all.insert(all.end(), extras.begin(), extras.end());
        return all;
    }());
    std::vector<Polynomial> base;
    base.push_back(binomial);
    for (const Monomial& p : pures)
        base.push_back(Polynomial::from_monomial(p));
    std::vector<Monomial> kept;
    for (const Monomial& e : extras) {
        bool minimal =
            std::find(reference.gens().begin(), reference.gens().end(), e) !=
            reference.gens().end();
        if (!minimal)
            continue;
        if (reduce(Polynomial::from_monomial(e), base).is_zero())
            continue;
        kept.push_back(e);
    }
    std::sort(kept.begin(), kept.end(), GrlexGreater{});
    return kept;
}

std::vector<Polynomial> assemble_family(const Polynomial& binomial,
                                        const std::vector<Monomial>& pures,
                                        const std::vector<Monomial>& extras) {
    std::vector<Polynomial> gens;
    gens.push_back(binomial);
    for (const Monomial& p : pures)
        gens.push_back(Polynomial::from_monomial(p));
    for (const Monomial& e : extras)
        gens.push_back(Polynomial::from_monomial(e));
    return gens;
}

} // namespace

BinomialFamily kprime_gens(const std::vector<Exponent>& d,
                           const std::vector<Exponent>& alpha,
                           const Rational& c) {
    check_family_input(d, alpha);
    if (c == 0)
        throw std::invalid_argument("the binomial needs a nonzero constant");
    const int n = (int)d.size();
    std::vector<Exponent> tailexp(alpha);
    tailexp[0] = 0;
    Polynomial binomial({Term{Rational(1), Monomial::variable(n, 0, d[0])},
                         Term{c, Monomial(tailexp)}});
    std::vector<Monomial> pures;
    for (int i = 1; i < n; ++i)
        pures.push_back(Monomial::variable(n, i, d[(std::size_t)i]));
    std::vector<Monomial> extras;
    Monomial prefix = Monomial::variable(n, 0, d[0] - alpha[0]);
    for (int i = 1; i < n; ++i)
        extras.push_back(prefix * Monomial::variable(
                                      n, i,
                                      d[(std::size_t)i] - alpha[(std::size_t)i]));
    BinomialFamily f;
    f.n = n;
    f.d = d;
    f.alpha = alpha;
    f.c = c;
    f.gens = assemble_family(binomial, pures,
                             prune_extras(binomial, pures, extras, n));
    return f;
}

std::vector<Polynomial> kprime_from_table(const Table& t, const Rational& c) {
    if (!validate(t).empty())
        throw std::invalid_argument("invalid table");
    if (t.s < 1)
        throw std::invalid_argument("need a table with s >= 1");
    if (c == 0) {
        MonomialIdeal k = ideal_of(t);
        std::vector<Polynomial> gens;
        for (const Monomial& g : k.gens())
            gens.push_back(Polynomial::from_monomial(g));
        return gens;
    }
    const int n = t.n;
    std::vector<Exponent> tailexp((std::size_t)n, 0);
    if (n >= 2)
        tailexp[1] = t.alpha[0][1] + (t.s >= 2 ? t.alpha[1][1] : 0);
    for (int i = 3; i <= n; ++i)
        tailexp[(std::size_t)(i - 1)] = t.alpha[0][(std::size_t)(i - 1)];
    Polynomial binomial({Term{Rational(1), Monomial::variable(n, 0, t.d[0])},
                         Term{c, Monomial(tailexp)}});
    std::vector<Monomial> pures;
    for (int i = 1; i < n; ++i)
        pures.push_back(Monomial::variable(n, i, t.d[(std::size_t)i]));
    // The K_1..K_s generators, assembled exactly as in ideal_of.
    std::vector<Monomial> extras;
    std::vector<Exponent> colsum((std::size_t)n, 0);
    for (int i = 1; i <= t.s; ++i) {
        for (int j = 1; j <= n; ++j)
            colsum[(std::size_t)(j - 1)] = checked_add(
                colsum[(std::size_t)(j - 1)],
                t.alpha[(std::size_t)(i - 1)][(std::size_t)(j - 1)]);
        std::vector<Exponent> prefix((std::size_t)n, 0);
        for (int j = 1; j <= i; ++j)
            prefix[(std::size_t)(j - 1)] =
                t.d[(std::size_t)(j - 1)] - colsum[(std::size_t)(j - 1)];
        Monomial pre(prefix);
        for (int j = i + 1; j <= n; ++j)
            extras.push_back(pre * Monomial::variable(
                                       n, j - 1,
                                       t.d[(std::size_t)(j - 1)] -
                                           colsum[(std::size_t)(j - 1)]));
    }
    return assemble_family(binomial, pures,
                           prune_extras(binomial, pures, extras, n));
}

namespace {

void compositions_rec(int vars, int var, Exponent remaining,
                      std::vector<Exponent>& current,
                      std::vector<std::vector<Exponent>>& out) {
    if (var + 1 == vars) {
        current[(std::size_t)var] = remaining;
        out.push_back(current);
        return;
    }
    for (Exponent e = remaining; e >= 0; --e) {
        current[(std::size_t)var] = e;
        compositions_rec(vars, var + 1, remaining - e, current, out);
    }
}

std::vector<std::vector<Exponent>> compositions(int vars, Exponent d) {
    std::vector<std::vector<Exponent>> out;
    std::vector<Exponent> current((std::size_t)vars, 0);
    compositions_rec(vars, 0, d, current, out);
    return out;
}

// (w_1 x_1 + ... + w_n x_n)^d with its multinomial coefficients.
Polynomial ell_power(int n, Exponent d, const std::vector<long>& weights) {
    std::vector<Term> terms;
    mpz_class dfac, f;
    mpz_fac_ui(dfac.get_mpz_t(), (unsigned long)d);
    for (const auto& e : compositions(n, d)) {
        mpz_class coeff = dfac;
        for (Exponent ej : e) {
            mpz_fac_ui(f.get_mpz_t(), (unsigned long)ej);
            coeff /= f;
        }
        for (int v = 0; v < n; ++v)
            for (Exponent k = 0; k < e[(std::size_t)v]; ++k)
                coeff *= weights[(std::size_t)v];
        terms.push_back({Rational(coeff), Monomial(e)});
    }
    return Polynomial(std::move(terms));
}

// Candidate coefficient vectors for the Lefschetz form. The sum of the
// variables comes first; the geometric ladders only matter when a relation
// of K' makes an earlier form degenerate on the quotient, which cannot
// happen for monomial ideals but does for binomial ones (e.g. x + z in K').
// Reaching the expected rank with any single specialization certifies the
// generic rank exactly, since rank deficiency is a closed condition.
std::vector<std::vector<long>> lefschetz_weight_ladder(int n) {
    std::vector<std::vector<long>> ladder;
    for (long base : {1L, 2L, 3L, 5L, 7L}) {
        std::vector<long> w;
        long value = 1;
        for (int v = 0; v < n; ++v) {
            w.push_back(value);
            value *= base;
        }
        ladder.push_back(std::move(w));
        if (base == 1 && n == 1)
            break;
    }
    return ladder;
}

struct DegreeBasis {
    std::vector<Monomial> monos;
    std::unordered_map<Monomial, long long, MonomialHash> index;

    DegreeBasis() = default;
    DegreeBasis(const MonomialIdeal& initial, Exponent degree)
        : monos(standard_monomials(initial, degree)) {
        for (std::size_t i = 0; i < monos.size(); ++i)
            index.emplace(monos[i], (long long)i);
    }
};

// Matrix entries of multiplication by q from src to dst, on normal forms
// modulo the given Groebner basis.
std::vector<RationalEntry> mult_matrix(const std::vector<Polynomial>& gens,
                                       const DegreeBasis& src,
                                       const DegreeBasis& dst,
                                       const Polynomial& q) {
    std::vector<RationalEntry> entries;
    for (std::size_t col = 0; col < src.monos.size(); ++col) {
        Polynomial nf = reduce(q.times(src.monos[col]), gens);
        for (const Term& t : nf.terms()) {
            auto it = dst.index.find(t.mono);
            if (it == dst.index.end())
                throw std::logic_error("normal form left the quotient basis");
            entries.emplace_back(it->second, (long long)col, t.coeff);
        }
    }
    return entries;
}

HilbertData quotient_hilbert(const MonomialIdeal& initial,
                             std::size_t dimension_cap) {
    if (initial.is_unit())
        throw std::invalid_argument("the quotient is the zero algebra");
    if (!is_artinian(initial))
        throw std::invalid_argument("the quotient is not finite-dimensional");
    HilbertData h = hilbert_data(initial);
    long long total = 0;
    for (long long v : h.values)
        total += v;
    if ((std::size_t)total > dimension_cap)
        throw cap_exceeded_error("quotient dimension " + std::to_string(total) +
                                 " exceeds the cap of " +
                                 std::to_string(dimension_cap));
    return h;
}

} // namespace

bool verify_colon_identity(const BinomialFamily& f,
                           std::size_t dimension_cap) {
    check_family_input(f.d, f.alpha);
    const int n = f.n;
    const Exponent a1 = f.alpha[0];
    std::vector<Exponent> tailexp(f.alpha);
    tailexp[0] = 0;
    Polynomial binomial({Term{Rational(1), Monomial::variable(n, 0, f.d[0])},
                         Term{f.c, Monomial(tailexp)}});
    std::vector<Polynomial> ci_gens{binomial};
    std::vector<Monomial> ci_lts{Monomial::variable(n, 0, f.d[0])};
    for (int i = 1; i < n; ++i) {
        ci_gens.push_back(Polynomial::from_monomial(
            Monomial::variable(n, i, f.d[(std::size_t)i])));
        ci_lts.push_back(Monomial::variable(n, i, f.d[(std::size_t)i]));
    }
    if (a1 == 0) {
        // Colon by 1: the claim degenerates to K' = a.
        for (const Polynomial& g : f.gens)
            if (!reduce(g, ci_gens).is_zero())
                return false;
        return true;
    }
    MonomialIdeal ci_initial(n, ci_lts);
    HilbertData h = quotient_hilbert(ci_initial, dimension_cap);
    const Exponent socle = h.socle_degree;
    const Monomial x1a = Monomial::variable(n, 0, a1);
    const Polynomial x1a_poly = Polynomial::from_monomial(x1a);
    for (Exponent t = 0; t <= socle; ++t) {
        DegreeBasis src(ci_initial, t);
        DegreeBasis dst(ci_initial, t + a1);
        auto entries = mult_matrix(ci_gens, src, dst, x1a_poly);
        long long nullity =
            (long long)src.monos.size() -
            exact_rank(clear_denominators((long long)dst.monos.size(),
                                          (long long)src.monos.size(), entries));
        // Span of the K' generators inside [R/a]_t.
        std::vector<RationalEntry> span;
        long long span_cols = 0;
        for (const Polynomial& g : f.gens) {
            if (g.is_zero())
                continue;
            Exponent dg = g.leading().mono.degree();
            if (dg > t)
                continue;
            for (const auto& e : compositions(n, t - dg)) {
                Monomial u(e);
                Polynomial nf = reduce(g.times(u), ci_gens);
                // Every member of K' must land in the kernel.
                if (!reduce(nf.times(x1a), ci_gens).is_zero())
                    return false;
                for (const Term& term : nf.terms()) {
                    auto it = src.index.find(term.mono);
                    if (it == src.index.end())
                        throw std::logic_error("normal form left the basis");
                    span.emplace_back(it->second, span_cols, term.coeff);
                }
                ++span_cols;
            }
        }
        long long span_rank =
            span_cols == 0
                ? 0
                : exact_rank(clear_denominators((long long)src.monos.size(),
                                                span_cols, span));
        if (span_rank != nullity)
            return false;
    }
    return true;
}

long long socle_dimension(const std::vector<Polynomial>& gens, int n,
                          std::size_t dimension_cap) {
    MonomialIdeal initial = initial_ideal(gens, n);
    if (initial.is_unit())
        return 0;
    HilbertData h = quotient_hilbert(initial, dimension_cap);
    long long total = 0;
    for (Exponent t = 0; t <= h.socle_degree; ++t) {
        DegreeBasis src(initial, t);
        DegreeBasis dst(initial, t + 1);
        std::vector<RationalEntry> stacked;
        for (int v = 0; v < n; ++v) {
            auto entries = mult_matrix(
                gens, src, dst,
                Polynomial::from_monomial(Monomial::variable(n, v)));
            for (auto& [r, c, q] : entries)
                stacked.emplace_back(r + (long long)v * (long long)dst.monos.size(),
                                     c, q);
        }
        long long rank = exact_rank(clear_denominators(
            (long long)n * (long long)dst.monos.size(),
            (long long)src.monos.size(), stacked));
        total += (long long)src.monos.size() - rank;
    }
    return total;
}

long long socle_dimension(const BinomialFamily& f, std::size_t dimension_cap) {
    return socle_dimension(f.gens, f.n, dimension_cap);
}

LefschetzReport check_slp_quotient(const std::vector<Polynomial>& gens, int n,
                                   std::size_t dimension_cap, int threads) {
    MonomialIdeal initial = initial_ideal(gens, n);
    HilbertData h = quotient_hilbert(initial, dimension_cap);
    const auto ladder = lefschetz_weight_ladder(n);
    auto rank_of = [&](Exponent i, Exponent d) {
        DegreeBasis src(initial, i);
        DegreeBasis dst(initial, i + d);
        long long expected = std::min((long long)src.monos.size(),
                                      (long long)dst.monos.size());
        long long best = 0;
        for (const auto& weights : ladder) {
            auto entries =
                mult_matrix(gens, src, dst, ell_power(n, d, weights));
            best = std::max(best,
                            exact_rank(clear_denominators(
                                (long long)dst.monos.size(),
                                (long long)src.monos.size(), entries)));
            if (best == expected)
                break;
        }
        return best;
    };
    return run_max_rank_sweep(LefschetzProperty::strong, h, rank_of, threads);
}

LefschetzReport check_slp_binomial(const BinomialFamily& f,
                                   std::size_t dimension_cap, int threads) {
    return check_slp_quotient(f.gens, f.n, dimension_cap, threads);
}

GorensteinCertificate gorenstein_certificate(const std::vector<Exponent>& d,
                                             const std::vector<Exponent>& alpha,
                                             const Rational& c,
                                             std::size_t dimension_cap,
                                             int threads) {
    GorensteinCertificate cert;
    cert.family = kprime_gens(d, alpha, c);
    cert.groebner = s_pair_check(cert.family);
    if (!cert.groebner)
        return cert;
    MonomialIdeal initial = initial_ideal(cert.family);
    cert.proper = initial.is_proper();
    cert.initial_matches_lemma = initial == lemma31_ideal(d, alpha);
    if (!cert.proper)
        return cert;
    cert.colon_identity = verify_colon_identity(cert.family, dimension_cap);
    cert.socle_dim = socle_dimension(cert.family, dimension_cap);
    cert.gorenstein = cert.socle_dim == 1;
    cert.slp = check_slp_binomial(cert.family, dimension_cap, threads);
    cert.hilbert = quotient_hilbert(initial, dimension_cap).values;
    cert.passed = cert.groebner && cert.initial_matches_lemma &&
                  cert.colon_identity && cert.gorenstein && cert.slp.verdict;
    return cert;
}

} // namespace monlef
