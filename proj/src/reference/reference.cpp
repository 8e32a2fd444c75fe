#include "fw/reference/reference.hpp"

#include <stdexcept>

namespace fw::reference {

using alg::OperatorExpr;
using alg::Rational;
using namespace alg::ops;

namespace {

OperatorExpr m(int p) { return inv_mc2(p); }
OperatorExpr O2() { return O() * O(); }
OperatorExpr O3() { return O2() * O(); }
OperatorExpr On(unsigned n) { return alg::pow(O(), n); }
OperatorExpr sq(const OperatorExpr& x) { return x * x; }
OperatorExpr I() { return OperatorExpr::scalar(alg::Complex::i()); }

OperatorExpr OF() { return comm(O(), F()); }
OperatorExpr OOF() { return comm(O(), OF()); }
OperatorExpr OOOF() { return comm(O(), OOF()); }
OperatorExpr OOOOF() { return comm(O(), OOOF()); }
OperatorExpr OFF() { return comm(OF(), F()); }
OperatorExpr OFFF() { return comm(OFF(), F()); }
OperatorExpr O2F() { return comm(O2(), F()); }
OperatorExpr O2O2F() { return comm(O2(), O2F()); }

ReferencePart part(std::string label, Rational c, OperatorExpr prefactor, OperatorExpr body)
{
    return {std::move(label), c, std::move(prefactor), std::move(body)};
}

// beta mc^2 + E
std::vector<ReferencePart> rest_and_potential()
{
    return {part("beta mc^2", 1, beta() * m(-1), one()), part("E", 1, one(), E())};
}

void append(std::vector<ReferencePart>& to, std::vector<ReferencePart> from)
{
    for (auto& p : from) to.push_back(std::move(p));
}

// Kinetic series beta*(O^2/2 - O^4/8 + k6*O^6 - 5/128 O^8) up to the given O power.
std::vector<ReferencePart> kinetic(int max_power, Rational k6)
{
    std::vector<ReferencePart> out;
    out.push_back(part("beta O^2", Rational(1, 2), beta() * m(1), O2()));
    if (max_power >= 4) out.push_back(part("beta O^4", Rational(-1, 8), beta() * m(3), On(4)));
    if (max_power >= 6) out.push_back(part("beta O^6", k6, beta() * m(5), On(6)));
    if (max_power >= 8) out.push_back(part("beta O^8", Rational(-5, 128), beta() * m(7), On(8)));
    return out;
}

std::vector<ReferencePart> h_prime_34()
{
    auto out = rest_and_potential();
    append(out, kinetic(6, Rational(1, 144)));
    append(out, {
        part("[O,[O,F]]", Rational(-1, 8), m(2), OOF()),
        part("[O,[O,[O,[O,F]]]]", Rational(1, 384), m(4), OOOOF()),
        part("beta [O,F]", Rational(1, 2), beta() * m(1), OF()),
        part("O^3", Rational(-1, 3), m(2), O3()),
        part("O^5", Rational(1, 30), m(4), On(5)),
        part("beta [O,[O,[O,F]]]", Rational(-1, 48), beta() * m(3), OOOF()),
    });
    return out;
}

std::vector<ReferencePart> s_prime_34()
{
    return {
        part("i [O,F]", Rational(-1, 4), I() * m(2), OF()),
        part("i beta O^3", Rational(1, 6), I() * beta() * m(3), O3()),
        part("i beta O^5", Rational(-1, 60), I() * beta() * m(5), On(5)),
        part("i [O,[O,[O,F]]]", Rational(1, 96), I() * m(4), OOOF()),
    };
}

std::vector<ReferencePart> h_orig_35()
{
    auto out = rest_and_potential();
    append(out, kinetic(6, Rational(1, 16)));
    append(out, {
        part("[O,[O,F]]", Rational(-1, 8), m(2), OOF()),
        part("beta [O,F]^2", Rational(-1, 8), beta() * m(3), sq(OF())),
        part("{O^2,[O,[O,F]]}", Rational(3, 64), m(4), acomm(O2(), OOF())),
        part("[O^2,[O^2,F]]", Rational(5, 128), m(4), O2O2F()),
    });
    return out;
}

std::vector<ReferencePart> h_dprime_34()
{
    auto out = h_orig_35();
    append(out, {
        part("[[O,F],F]", Rational(1, 4), m(2), OFF()),
        part("beta [O^3,F]", Rational(-1, 6), beta() * m(3), comm(O3(), F())),
        part("beta {O^2,[O,F]}", Rational(-1, 8), beta() * m(3), acomm(O2(), OF())),
    });
    return out;
}

std::vector<ReferencePart> s_dprime_34()
{
    return {
        part("i beta [[O,F],F]", Rational(-1, 8), I() * beta() * m(3), OFF()),
        part("i [O^3,F]", Rational(1, 12), I() * m(4), comm(O3(), F())),
        part("i {O^2,[O,F]}", Rational(1, 16), I() * m(4), acomm(O2(), OF())),
    };
}

// Terms shared by both corrected results.
std::vector<ReferencePart> corrected_common()
{
    return {
        part("[O,[O,F]]", Rational(-1, 8), m(2), OOF()),
        part("beta {O,[[O,F],F]}", Rational(1, 16), beta() * m(3), acomm(O(), OFF())),
        part("{O^2,[O,[O,F]]}", Rational(3, 64), m(4), acomm(O2(), OOF())),
        part("[O^2,[O^2,F]]", Rational(1, 128), m(4), O2O2F()),
    };
}

std::vector<ReferencePart> h_corr_38()
{
    auto out = rest_and_potential();
    append(out, kinetic(6, Rational(1, 16)));
    append(out, corrected_common());
    return out;
}

std::vector<ReferencePart> h_orig_40()
{
    auto out = rest_and_potential();
    append(out, kinetic(4, 0));
    append(out, {
        part("[O,[O,F]]", Rational(-1, 8), m(2), OOF()),
        part("beta [O,F]^2", Rational(-1, 8), beta() * m(3), sq(OF())),
        part("{O^2,[O,[O,F]]}", Rational(3, 64), m(4), acomm(O2(), OOF())),
        part("[O^2,[O^2,F]]", Rational(5, 128), m(4), O2O2F()),
        part("[[O,F],[[O,F],F]]", Rational(1, 32), m(4), comm(OF(), OFF())),
    });
    return out;
}

std::vector<ReferencePart> h_corr_43()
{
    auto out = rest_and_potential();
    append(out, kinetic(4, 0));
    append(out, corrected_common());
    out.push_back(part("[O,[[[O,F],F],F]]", Rational(-1, 32), m(4), comm(O(), OFFF())));
    return out;
}

std::vector<ReferencePart> a24()
{
    OperatorExpr pre = beta() * m(5) * c(1, 256);
    return {
        part("{O^2,[O,F]^2}", 24, pre, acomm(O2(), sq(OF()))),
        part("[O^2,F]^2", -20, pre, sq(O2F())),
        part("{O^2,[[O^2,F],F]}", -14, pre, acomm(O2(), comm(O2F(), F()))),
        part("[O,[O,[[O^2,F],F]]]", -4, pre, comm(O(), comm(O(), comm(O2F(), F())))),
        part("[[O,[O,[O^2,F]]],F]", Rational(9, 2), pre, comm(comm(O(), comm(O(), O2F())), F())),
        part("[[O,[O,F]],[O^2,F]]", Rational(-9, 2), pre, comm(OOF(), O2F())),
        part("[O^2,[O,[[O,F],F]]]", Rational(5, 2), pre, comm(O2(), comm(O(), OFF()))),
    };
}

std::vector<ReferencePart> eriksen_24()
{
    std::vector<ReferencePart> out{part("beta mc^2", 1, beta() * m(-1), one())};
    append(out, kinetic(8, Rational(1, 16)));
    out.push_back(part("E", 1, one(), E()));
    OperatorExpr poly1 = c(8) * m(-4) - c(6) * m(-2) * O2() + c(5) * On(4);
    OperatorExpr poly2 = c(2) * m(-2) - O2();
    append(out, {
        part("{(8m^4c^8 - 6m^2c^4 O^2 + 5O^4),[O,[O,F]]}", Rational(-1, 128), m(6), acomm(poly1, OOF())),
        part("{(2m^2c^4 - O^2),[O^2,[O^2,F]]}", Rational(1, 512), m(6), acomm(poly2, O2O2F())),
        part("beta {O,[[O,F],F]}", Rational(1, 16), beta() * m(3), acomm(O(), OFF())),
        part("[O,[[[O,F],F],F]]", Rational(-1, 32), m(4), comm(O(), OFFF())),
        part("[O^2,[O^2,[O,[O,F]]]]", Rational(11, 1024), m(6), comm(O2(), comm(O2(), OOF()))),
    });
    append(out, a24());
    return out;
}

std::vector<ReferencePart> free_particle_22()
{
    std::vector<ReferencePart> out{part("beta mc^2", 1, beta() * m(-1), one())};
    append(out, kinetic(8, Rational(1, 16)));
    return out;
}

OperatorExpr sum(const std::vector<ReferencePart>& ps)
{
    OperatorExpr out;
    for (const auto& p : ps) out += p.value();
    return out;
}

}  // namespace

std::string_view name(ReferenceId id)
{
    switch (id) {
    case ReferenceId::H_prime_34: return "H_prime_34";
    case ReferenceId::S_prime_34: return "S_prime_34";
    case ReferenceId::H_dprime_34: return "H_dprime_34";
    case ReferenceId::S_dprime_34: return "S_dprime_34";
    case ReferenceId::H_orig_35: return "H_orig_35";
    case ReferenceId::H_corr_38: return "H_corr_38";
    case ReferenceId::Steps_39: return "Steps_39";
    case ReferenceId::H_orig_40: return "H_orig_40";
    case ReferenceId::H_corr_43: return "H_corr_43";
    case ReferenceId::Eriksen_24: return "Eriksen_24";
    case ReferenceId::A24_25: return "A24_25";
    case ReferenceId::FreeParticle_22: return "FreeParticle_22";
    case ReferenceId::Dirac_13: return "Dirac_13";
    }
    return "?";
}

OperatorExpr ReferencePart::value() const
{
    return alg::scale(coefficient, prefactor * body);
}

std::vector<ReferencePart> parts(ReferenceId id)
{
    switch (id) {
    case ReferenceId::H_prime_34: return h_prime_34();
    case ReferenceId::S_prime_34: return s_prime_34();
    case ReferenceId::H_dprime_34: return h_dprime_34();
    case ReferenceId::S_dprime_34: return s_dprime_34();
    case ReferenceId::H_orig_35: return h_orig_35();
    case ReferenceId::H_corr_38: return h_corr_38();
    case ReferenceId::H_orig_40: return h_orig_40();
    case ReferenceId::H_corr_43: return h_corr_43();
    case ReferenceId::Eriksen_24: return eriksen_24();
    case ReferenceId::A24_25: return a24();
    case ReferenceId::FreeParticle_22: return free_particle_22();
    case ReferenceId::Steps_39:
    case ReferenceId::Dirac_13: break;
    }
    throw std::invalid_argument(std::string(name(id)) + " is not a single abstract expression");
}

OperatorExpr build(ReferenceId id) { return sum(parts(id)); }

std::vector<OperatorExpr> build_sequence(ReferenceId id)
{
    OperatorExpr s0 = I() * beta() * O() * m(1) * c(-1, 2);
    switch (id) {
    case ReferenceId::H_prime_34:
    case ReferenceId::S_prime_34:
    case ReferenceId::H_dprime_34:
    case ReferenceId::S_dprime_34:
        return {s0, build(ReferenceId::S_prime_34), build(ReferenceId::S_dprime_34)};
    case ReferenceId::Steps_39: {
        OperatorExpr s1 = sum({
            part("i [O,F]", Rational(-1, 4), I() * m(2), OF()),
            part("i beta O^3", Rational(1, 6), I() * beta() * m(3), O3()),
            part("i [O,[O,[O,F]]]", Rational(1, 96), I() * m(4), OOOF()),
        });
        OperatorExpr s3 = sum({part("i [[[O,F],F],F]", Rational(-1, 16), I() * m(4), OFFF())});
        return {s0, s1, build(ReferenceId::S_dprime_34), s3};
    }
    default: break;
    }
    throw std::invalid_argument(std::string(name(id)) + " has no step sequence");
}

}  // namespace fw::reference
