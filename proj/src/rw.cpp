#include "qi/rw.hpp"

#include <algorithm>

#include "qi/alexander.hpp"

namespace qi {

WeightData::WeightData(std::string name, int n, Rational euler_char,
                       std::map<Partition, Rational> pairing)
    : name_(std::move(name)), n_(n), euler_char_(std::move(euler_char)),
      pairing_(std::move(pairing)) {
    if (n_ < 1) throw InvariantError("weight data needs n >= 1");
    const auto expected = partitions_of(n_);
    if (pairing_.size() != expected.size())
        throw InvariantError("pairing table of '" + name_ + "' must have one entry per partition "
                             "of " + std::to_string(n_) + " (expected " +
                             std::to_string(expected.size()) + ", got " +
                             std::to_string(pairing_.size()) + ")");
    for (const auto& p : expected)
        if (!pairing_.count(p))
            throw InvariantError("pairing table of '" + name_ + "' is missing the partition " +
                                 partition_key(p));
}

const Rational& WeightData::pairing(const Partition& p) const {
    const auto it = pairing_.find(p);
    if (it == pairing_.end())
        throw DomainError("no pairing entry for partition " + partition_key(p) + " on '" +
                          name_ + "'");
    return it->second;
}

WeightData weight_data_k3() {
    return WeightData("k3", 1, Rational(24), {{Partition{1}, Rational(-24)}});
}

WeightData weight_data_t4() {
    return WeightData("t4", 1, Rational(0), {{Partition{1}, Rational(0)}});
}

WeightData weight_data_k3xk3() { return product_space(weight_data_k3(), weight_data_k3()); }

std::set<std::pair<int, int>> feasible_vertex_counts(int n, int b1) {
    if (n < 1) throw DomainError("vertex counting needs n >= 1");
    if (b1 < 0) throw DomainError("b1 must be >= 0");
    std::set<std::pair<int, int>> counts;
    if (b1 >= 4) return counts;
    if (b1 >= 2) {
        counts.insert({2 * n, 0});
        return counts;
    }
    for (int p = 0; p <= 2 * n; ++p) counts.insert({p, 2 * n - p});
    return counts;
}

namespace {

std::string p_var(int m) { return "p" + std::to_string(m); }

int p_weight(const std::string& name) { return std::stoi(name.substr(1)); }

// <exp(-2 sum alpha_m P_m)>_X at top degree n, expanded over partitions.
Rational pair_exponential(const std::map<int, Rational>& alpha, const WeightData& x) {
    const int n = x.n();
    MultiPoly f;
    for (const auto& [m, c] : alpha) {
        if (m > n) break;
        f += MultiPoly(Rational(-2) * c) * MultiPoly::variable(p_var(m));
    }
    const MultiPoly e = exp_truncated(f, p_weight, n);
    Rational acc(0);
    for (const auto& p : partitions_of(n)) {
        Monomial mono;
        for (int m : p) mono = mono * Monomial::variable(p_var(m));
        const Rational c = e.coeff(mono);
        if (!c.is_zero()) acc += c * x.pairing(p);
    }
    return acc;
}

}  // namespace

Rational rw_invariant(const ClassicalData& d, const WeightData& x, TorsionFactor torsion) {
    const int n = x.n();
    switch (d.b1()) {
        case 0:
            throw UnsupportedError("no closed weight evaluation for b1 = 0; use the "
                                   "lambda-algebra with supplied values");
        case 1: {
            Rational tor_factor(1);
            if (d.tor_order() != 1) {
                if (torsion == TorsionFactor::Reject)
                    throw UnsupportedError(
                        "b1 = 1 evaluation for nontrivial torsion is only available with the "
                        "explicit torsion factor enabled; '" + d.name() + "' has torsion order " +
                        d.tor_order().get_str());
                tor_factor = Rational(int_pow(d.tor_order(), static_cast<unsigned>(n)));
            }
            // Wheel coefficients to x-order 2n cover every P_m with m <= n.
            std::map<int, Rational> alpha;
            const auto b = sinh_kernel_coeffs(2 * n);
            const auto a = alexander_log_coeffs(d.alexander(), 2 * n);
            for (int m = 1; m <= n; ++m) alpha[m] = Rational(2) * b.at(m) + a.at(m);
            const Rational sign = n % 2 == 0 ? Rational(1) : Rational(-1);
            return sign * tor_factor * pair_exponential(alpha, x);
        }
        case 2:
        case 3:
            return x.euler_char() * lescop_invariant(d).pow(static_cast<unsigned>(n));
        default:
            return Rational(0);
    }
}

Rational pair_weights(const FormalDiagramSeries& s, const WeightData& x) {
    const int n = x.n();
    const Rational wheel_sign = n % 2 == 0 ? Rational(1) : Rational(-1);
    Rational acc(0);
    for (const auto& [sym, c] : s.terms()) {
        if (sym.degree() != n) continue;
        switch (sym.kind) {
            case DiagramSymbol::Kind::Gamma:
            case DiagramSymbol::Kind::H:
                acc += c * x.euler_char();
                break;
            case DiagramSymbol::Kind::Wheels: {
                const Rational minus_two_r =
                    Rational(-2).pow(static_cast<unsigned>(sym.wheels.size()));
                acc += wheel_sign * minus_two_r * c * x.pairing(sym.wheels);
                break;
            }
            case DiagramSymbol::Kind::Empty:
                break;  // degree 0 < n for any weight data
        }
    }
    return acc;
}

WeightData product_space(const WeightData& a, const WeightData& b) {
    const int n = a.n() + b.n();
    std::map<Partition, Rational> pairing;
    for (const auto& p : partitions_of(n)) {
        const auto mults = part_multiplicities(p);
        // Choose how many copies of each part go to the first factor.
        std::vector<std::pair<int, int>> items(mults.begin(), mults.end());
        Rational total(0);
        Partition left;
        auto rec = [&](auto&& self, std::size_t idx, int left_weight, const Integer& ways) -> void {
            if (left_weight > a.n()) return;
            if (idx == items.size()) {
                if (left_weight != a.n()) return;
                Partition right;
                auto lm = part_multiplicities(left);
                for (const auto& [part, mult] : mults) {
                    const int keep = mult - (lm.count(part) ? lm[part] : 0);
                    right.insert(right.end(), static_cast<std::size_t>(keep), part);
                }
                total += Rational(ways) * a.pairing(left) * b.pairing(make_partition(right));
                return;
            }
            const auto [part, mult] = items[idx];
            for (int take = 0; take <= mult; ++take) {
                if (take > 0) left.insert(left.end(), 1, part);
                self(self, idx + 1, left_weight + take * part,
                     ways * binomial(static_cast<unsigned>(mult), static_cast<unsigned>(take)));
            }
            left.resize(left.size() - static_cast<std::size_t>(mult));
        };
        rec(rec, 0, 0, Integer(1));
        pairing[p] = total;
    }
    return WeightData(a.name() + "x" + b.name(), n, a.euler_char() * b.euler_char(),
                      std::move(pairing));
}

MultiPoly observable_reduce(int n, int k, const H1Order& h1, const MultiPoly& z_k) {
    if (k < 0 || k > n) throw DomainError("observable reduction needs 0 <= k <= n");
    if (k == n) return z_k;
    return MultiPoly(Rational(int_pow(h1.value, static_cast<unsigned>(n - k)))) * z_k;
}

int orientation_sign(int n, int k, int b1) {
    if (k < 0 || k > n) throw DomainError("orientation sign needs 0 <= k <= n");
    return ((n - k) * (1 + b1)) % 2 == 0 ? 1 : -1;
}

Integer hilbert_scheme_euler(int n) {
    if (n < 0) throw DomainError("hilbert-scheme Euler number needs n >= 0");
    // Coefficients of prod_{k=1..n} (1 - t^k)^{-24} mod t^{n+1}.
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
    c[0] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<Integer> next(c.size(), Integer(0));
        // (1 - t^k)^{-24} = sum_j C(23 + j, 23) t^{kj}
        for (int j = 0; k * j <= n; ++j) {
            const Integer binom = binomial(static_cast<unsigned>(23 + j), 23u);
            for (int i = 0; i + k * j <= n; ++i)
                next[static_cast<std::size_t>(i + k * j)] += c[static_cast<std::size_t>(i)] * binom;
        }
        c = std::move(next);
    }
    return c[static_cast<std::size_t>(n)];
}

Integer kummer_euler(int n) {
    if (n < 1) throw DomainError("Kummer Euler number needs n >= 1");
    Integer sigma(0);
    for (int d = 1; d <= n + 1; ++d)
        if ((n + 1) % d == 0) sigma += d;
    return int_pow(Integer(n + 1), 3) * sigma;
}

}  // namespace qi
