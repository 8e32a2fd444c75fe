#include "fw/num/evaluate.hpp"

#include <cmath>
#include <map>

#include "fw/errors.hpp"

namespace fw::num {

namespace {

std::complex<double> to_complex(const alg::Complex& c) { return {c.re.to_double(), c.im.to_double()}; }

}  // namespace

Matrix evaluate_symbolic(const alg::OperatorExpr& expr, const MatrixModel& model)
{
    const Eigen::Index n = model.dim();
    const Matrix& H = model.hamiltonian;
    const Matrix& b = model.beta_matrix;
    const Matrix bHb = b * H * b;
    const Matrix odd = 0.5 * (H - bHb);
    const Matrix even = 0.5 * (H + bHb) - model.rest_energy() * b;

    std::map<alg::Word, Matrix> prefix{{alg::Word{}, Matrix::Identity(n, n)}};
    auto product = [&](const alg::Word& w) -> const Matrix& {
        alg::Word cur;
        for (alg::SymbolId s : w) {
            alg::Word next = cur;
            next.push_back(s);
            if (!prefix.contains(next)) {
                const Matrix* letter = nullptr;
                switch (s) {
                case alg::sym::beta: letter = &b; break;
                case alg::sym::O: letter = &odd; break;
                case alg::sym::E:
                case alg::sym::F: letter = &even; break;
                default: throw UnboundSymbol("no matrix for symbol " + alg::symbol_info(s).name);
                }
                prefix.emplace(next, prefix.at(cur) * *letter);
            }
            cur = std::move(next);
        }
        return prefix.at(cur);
    };

    Matrix out = Matrix::Zero(n, n);
    for (const auto& [key, coeff] : expr) {
        double scale = std::pow(model.rest_energy(), -key.mass_power);
        out += (to_complex(coeff) * scale) * product(key.word);
    }
    return out;
}

double spectral_norm(const Matrix& m)
{
    if (m.size() == 0) return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

}  // namespace fw::num
