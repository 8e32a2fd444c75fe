#include "fw/transform/bch.hpp"

#include <map>
#include <mutex>
#include <tuple>
#include <unordered_map>

#include <fmt/format.h>

#include "fw/errors.hpp"

namespace fw::transform {

using alg::Complex;
using alg::OperatorExpr;
using alg::Rational;
using alg::WeightScheme;

namespace {

// Word in the free algebra on {X, Y}; letter j is bit j (0 = X, 1 = Y).
struct FreeWord {
    std::uint32_t bits = 0;
    std::uint8_t len = 0;

    int y_count() const { return __builtin_popcount(bits); }
    int x_count() const { return len - y_count(); }
    bool letter(int j) const { return (bits >> j) & 1u; }
    FreeWord suffix(int j) const { return {bits >> j, static_cast<std::uint8_t>(len - j)}; }

    friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
};

FreeWord concat(FreeWord u, FreeWord v)
{
    return {u.bits | (v.bits << u.len), static_cast<std::uint8_t>(u.len + v.len)};
}

using FreeSeries = std::map<FreeWord, Rational>;

// Coefficients of log(exp(X) exp(Y)) restricted to words with
// x_count * weight_x + y_count * weight_y <= budget.
class FreeLog {
public:
    FreeLog(int weight_x, int weight_y, int budget) : wx_(weight_x), wy_(weight_y), budget_(budget) { compute(); }
    const FreeSeries& series() const { return log_; }

private:
    bool admissible(FreeWord w) const { return w.x_count() * wx_ + w.y_count() * wy_ <= budget_ && w.len < 32; }

    FreeSeries product(const FreeSeries& a, const FreeSeries& b) const
    {
        FreeSeries out;
        for (const auto& [u, cu] : a)
            for (const auto& [v, cv] : b) {
                FreeWord w = concat(u, v);
                if (!admissible(w)) continue;
                auto& slot = out[w];
                slot += cu * cv;
            }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
        return out;
    }

    void compute()
    {
        // P = exp(X) exp(Y) - 1 = sum over (r, s) != (0, 0) of X^r Y^s / (r! s!)
        FreeSeries p;
        Rational inv_r_fact = 1;
        for (int r = 0; r * wx_ <= budget_; ++r) {
            if (r > 0) inv_r_fact /= Rational(r);
            Rational inv_s_fact = 1;
            for (int s = 0; r * wx_ + s * wy_ <= budget_; ++s) {
                if (s > 0) inv_s_fact /= Rational(s);
                if (r == 0 && s == 0) continue;
                FreeWord w{((1u << s) - 1u) << r, static_cast<std::uint8_t>(r + s)};
                p[w] = inv_r_fact * inv_s_fact;
            }
        }
        // log(1 + P) = sum_k (-1)^(k+1) P^k / k
        FreeSeries power = p;
        for (int k = 1; !power.empty(); ++k) {
            Rational c(k % 2 == 1 ? 1 : -1, k);
            for (const auto& [w, cw] : power) {
                auto& slot = log_[w];
                slot += c * cw;
            }
            power = product(power, p);
        }
        std::erase_if(log_, [](const auto& kv) { return kv.second.is_zero(); });
    }

    int wx_;
    int wy_;
    int budget_;
    FreeSeries log_;
};

const FreeSeries& free_log(int weight_x, int weight_y, int budget)
{
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int>, FreeLog> cache;
    std::lock_guard lock(mutex);
    auto key = std::make_tuple(weight_x, weight_y, budget);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.try_emplace(key, weight_x, weight_y, budget).first;
    return it->second.series();
}

// Right-nested commutator [w0, [w1, ... [w_{n-2}, w_{n-1}]]] with X -> A, Y -> B.
class NestedCommutators {
public:
    NestedCommutators(const OperatorExpr& a, const OperatorExpr& b, WeightScheme scheme, int max_order)
        : a_(a), b_(b), scheme_(scheme), max_order_(max_order)
    {
    }

    const OperatorExpr& get(FreeWord w)
    {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
        OperatorExpr value;
        const OperatorExpr& head = w.letter(0) ? b_ : a_;
        if (w.len == 1) {
            value = head;
        } else {
            value = alg::commutator(head, get(w.suffix(1)), scheme_, max_order_);
        }
        return memo_.emplace(w, std::move(value)).first->second;
    }

private:
    const OperatorExpr& a_;
    const OperatorExpr& b_;
    WeightScheme scheme_;
    int max_order_;
    std::map<FreeWord, OperatorExpr> memo_;
};

}  // namespace

OperatorExpr bch_combine(const OperatorExpr& A, const OperatorExpr& B, WeightScheme scheme, int max_order)
{
    if (A.is_zero()) return alg::truncate(B, scheme, max_order);
    if (B.is_zero()) return alg::truncate(A, scheme, max_order);
    int wa = *alg::min_order(A, scheme);
    int wb = *alg::min_order(B, scheme);
    if (wa < 1 || wb < 1)
        throw NonIncreasingOrder(fmt::format("BCH operands need minimum order >= 1 (got {} and {})", wa, wb));

    NestedCommutators rho(A, B, scheme, max_order);
    OperatorExpr z;
    for (const auto& [w, c] : free_log(wa, wb, max_order)) {
        // [.., [x, x]] vanishes
        if (w.len >= 2 && w.letter(w.len - 1) == w.letter(w.len - 2)) continue;
        const OperatorExpr& nested = rho.get(w);
        if (nested.is_zero()) continue;
        z += Complex(c / Rational(w.len)) * nested;
    }
    return alg::truncate(z, scheme, max_order);
}

}  // namespace fw::transform
