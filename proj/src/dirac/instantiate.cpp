#include "fw/dirac/instantiate.hpp"

#include "fw/errors.hpp"

namespace fw::dirac {

using alg::Complex;

DiracExpr odd_dirac()
{
    DiracExpr out;
    for (int a = 0; a < 3; ++a) out += DiracExpr::gamma(alpha(a)) * DiracExpr::pi(a);
    return DiracExpr::scalar(Complex(1), Units{1, 0, 0, 0}) * out;
}

DiracExpr instantiate(const alg::OperatorExpr& abstract, const FieldContext& ctx)
{
    const DiracExpr O = odd_dirac();
    const DiracExpr E = DiracExpr::scalar(Complex(1), Units{0, 0, 1, 0}) * DiracExpr::field(Phi());
    const DiracExpr F = DiracExpr::F();
    const DiracExpr beta = DiracExpr::gamma(beta_gamma);

    // Products of word prefixes are shared between terms.
    std::map<alg::Word, DiracExpr> prefix{{alg::Word{}, DiracExpr::scalar(Complex(1))}};
    auto product = [&](const alg::Word& w) -> const DiracExpr& {
        std::size_t n = 0;
        alg::Word cur;
        while (n < w.size() && prefix.contains(alg::Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n) + 1))) ++n;
        cur.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
        for (; n < w.size(); ++n) {
            const DiracExpr* letter = nullptr;
            switch (w[n]) {
            case alg::sym::beta: letter = &beta; break;
            case alg::sym::O: letter = &O; break;
            case alg::sym::E: letter = &E; break;
            case alg::sym::F: letter = &F; break;
            default:
                throw UnreducedWord("symbol " + alg::symbol_info(w[n]).name + " has no Dirac representation");
            }
            DiracExpr next = prefix.at(cur) * *letter;
            if (ctx.free) next = drop_fields(next);
            cur.push_back(w[n]);
            prefix.emplace(cur, std::move(next));
        }
        return prefix.at(cur);
    };

    DiracExpr out;
    for (const auto& [key, coeff] : abstract) {
        Units u{-2 * key.mass_power, -key.mass_power, 0, key.hbar_power};
        out += DiracExpr::scalar(coeff, u) * product(key.word);
    }
    return ctx.free ? drop_fields(out) : out;
}

}  // namespace fw::dirac
