#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "hypdom/combinatorics.hpp"
#include "hypdom/error.hpp"
#include "hypdom/hypergraph.hpp"

namespace hypdom {

enum class Quantity { D, Dt, Ed, Edt };

inline const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::D: return "d";
        case Quantity::Dt: return "dt";
        case Quantity::Ed: return "ed";
        case Quantity::Edt: return "edt";
    }
    return "?";
}

enum class BoundKind { Exact, LowerBound, NotApplicable };

inline const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::Exact: return "Exact";
        case BoundKind::LowerBound: return "LowerBound";
        case BoundKind::NotApplicable: return "NotApplicable";
    }
    return "?";
}

/// A predicted value for one of the four quantities, with the rule that
/// produced it. `value` is meaningful only when kind != NotApplicable.
struct FormulaResult {
    Quantity quantity = Quantity::D;
    BoundKind kind = BoundKind::NotApplicable;
    std::uint64_t value = 0;
    std::string citation;
};

/// Edge count of the complete bipartite r-uniform family; terms with r larger
/// than a part count as 0.
inline std::uint64_t bipartite_edge_count(std::size_t a, std::size_t b, std::size_t r) {
    return binomial(a + b, r) - binomial(a, r) - binomial(b, r);
}

// Rule catalog (see README for the statements):
//   Thm 1    complete:  d = n, dt = floor(n/2)              (r >= 2)
//   Thm 2    bipartite: d = n, dt = floor(n/2)              (r >= 3)
//   Lemma 3  any r-uniform, r > floor(n/2): ed = m
//   Thm 4    complete ed: C(n,r) if r > floor(n/2); C(n,r)*r/n if r | n
//   Thm 5    bipartite ed: = m/2 if a=b=r (case 1);
//            >= m/(2k) if a=b=kr (case 2); >= m/(2*min(a,b)/r) (case 3)
//   Lemma 6  bipartite 3-uniform, a=b=k even: ed = m/(k/2)
//   Lemma 7  bipartite a=b=r: m = 2*delta and ed = delta (same value as case 1)
//   Lemma 9  any r-uniform, r > floor(n/2): edt = floor(m/2)   (needs m >= 2)
//   Thm 9    complete edt: floor(C(n,r)/2) when r > floor(n/2)
//   Thm 10   bipartite a=b=r: edt = m/2 (= delta, Lemma 12)
//   Lemma 11 bipartite 3-uniform, a=b=k even, k >= 4: edt = m/(k/2)
inline FormulaResult formula(const FamilyDescriptor& f, Quantity q) {
    validate_family(f);
    FormulaResult res;
    res.quantity = q;
    auto exact = [&](std::uint64_t v, std::string cite) {
        res.kind = BoundKind::Exact;
        res.value = v;
        res.citation = std::move(cite);
        return res;
    };
    auto lower = [&](std::uint64_t v, std::string cite) {
        res.kind = BoundKind::LowerBound;
        res.value = v;
        res.citation = std::move(cite);
        return res;
    };
    auto none = [&](std::string why) {
        res.kind = BoundKind::NotApplicable;
        res.citation = std::move(why);
        return res;
    };

    if (const auto* c = std::get_if<Complete>(&f)) {
        std::size_t n = c->n, r = c->r;
        switch (q) {
            case Quantity::D:
                if (r >= 2) return exact(n, "Thm 1");
                return none("Thm 1 needs r >= 2");
            case Quantity::Dt:
                if (r >= 2) return exact(n / 2, "Thm 1");
                return none("Thm 1 needs r >= 2");
            case Quantity::Ed:
                if (r > n / 2) return exact(binomial(n, r), "Thm 4, r > floor(n/2)");
                if (n % r == 0) return exact(binomial(n, r) / (n / r), "Thm 4, r | n");
                return none("no rule for r <= floor(n/2) with r not dividing n");
            case Quantity::Edt:
                if (r > n / 2) {
                    std::uint64_t m = binomial(n, r);
                    if (m >= 2) return exact(m / 2, "Thm 9, r > floor(n/2)");
                    return none("single edge admits no total class");
                }
                return none("no rule for r <= floor(n/2)");
        }
    }

    const auto& cb = std::get<CompleteBipartite>(f);
    std::size_t a = cb.a, b = cb.b, r = cb.r, n = cb.a + cb.b;
    switch (q) {
        case Quantity::D:
            if (r >= 3) return exact(n, "Thm 2");
            return none("Thm 2 needs r >= 3");
        case Quantity::Dt:
            if (r >= 3) return exact(n / 2, "Thm 2");
            return none("Thm 2 needs r >= 3");
        case Quantity::Ed: {
            std::uint64_t m = bipartite_edge_count(a, b, r);
            if (r > n / 2) return exact(m, "Lemma 3, r > floor(n/2)");
            if (a == b && a == r) return exact(m / 2, "Thm 5 case 1, |X|=|Y|=r");
            if (r == 3 && a == b && a % 2 == 0)
                return exact(m / (a / 2), "Lemma 6, k=" + std::to_string(a));
            if (a == b && a % r == 0)
                return lower(m / (2 * (a / r)), "Thm 5 case 2, k=" + std::to_string(a / r));
            if (a % r == 0 && b % r == 0) {
                std::size_t k1 = std::min(a, b) / r;
                return lower(m / (2 * k1), "Thm 5 case 3, k1=" + std::to_string(k1));
            }
            return none("no rule for these part sizes");
        }
        case Quantity::Edt: {
            std::uint64_t m = bipartite_edge_count(a, b, r);
            if (r > n / 2) {
                if (m >= 2) return exact(m / 2, "Lemma 9, r > floor(n/2)");
                return none("single edge admits no total class");
            }
            if (a == b && a == r) return exact(m / 2, "Thm 10, |X|=|Y|=r");
            if (r == 3 && a == b && a % 2 == 0 && a >= 4)
                return exact(m / (a / 2), "Lemma 11, k=" + std::to_string(a));
            return none("no rule for these part sizes");
        }
    }
    return none("unreachable");
}

/// For |X| = |Y| = r, returns (m, delta) of the generated family; the handshake
/// identity m = 2*delta holds by construction (Lemma 7).
inline std::pair<std::uint64_t, std::uint64_t> degree_identity_check(const FamilyDescriptor& f) {
    const auto* cb = std::get_if<CompleteBipartite>(&f);
    if (!cb || cb->a != cb->r || cb->b != cb->r)
        fail(Errc::InvalidParams, "degree identity needs a complete bipartite family with |X|=|Y|=r");
    Hypergraph h = realize(f);
    auto deg = degrees(h);
    std::uint64_t delta = deg.empty() ? 0 : deg.front();
    for (std::size_t d : deg)
        if (d != delta) fail(Errc::InvalidParams, "family is not degree-regular");
    if (h.m() != 2 * delta) fail(Errc::InvalidParams, "m != 2*delta");
    return {h.m(), delta};
}

}  // namespace hypdom
