#pragma once

#include "lct/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lct {

struct TheoremIParams {
    Rational A, B, M, N, alpha, beta;

    void validate() const {
        for (const Rational* v : {&A, &B, &M, &N, &alpha, &beta})
            if (*v < 0) throw std::invalid_argument("Theorem I parameters must be non-negative");
    }
};

struct BulletReport {
    std::string name;
    bool holds = false;
};

// Bullets 2-4 only depend on the parameters.
inline std::vector<BulletReport> parameter_bullets(const TheoremIParams& p) {
    const Rational& A = p.A;
    const Rational& B = p.B;
    const Rational& M = p.M;
    const Rational& N = p.N;
    const Rational& al = p.alpha;
    const Rational& be = p.beta;
    bool b2 = A * (B - 1) >= 1 && 1 >= (M > N ? M : N);
    bool b3 = al * (A + M - 1) >= A * A * (B + N - 1) * be && al * (1 - M) + A * be >= A;
    bool b4 = 2 * M + A * N <= 2 ||
              al * (B + 1 - M * B - N) + be * (A + 1 - A * N - M) >= A * B - 1;
    return {{"A(B-1) >= 1 >= max(M,N)", b2},
            {"alpha(A+M-1) >= A^2(B+N-1)beta and alpha(1-M)+A beta >= A", b3},
            {"2M+AN <= 2 or alpha(B+1-MB-N)+beta(A+1-AN-M) >= AB-1", b4}};
}

inline bool check_parameter_bullets(const TheoremIParams& p) {
    for (const auto& b : parameter_bullets(p))
        if (!b.holds) return false;
    return true;
}

inline std::vector<BulletReport> hypothesis_bullets(const TheoremIParams& p, const Rational& a1,
                                                    const Rational& a2) {
    std::vector<BulletReport> out{{"alpha a1 + beta a2 <= 1", p.alpha * a1 + p.beta * a2 <= 1}};
    for (auto& b : parameter_bullets(p)) out.push_back(std::move(b));
    return out;
}

inline bool check_hypotheses(const TheoremIParams& p, const Rational& a1, const Rational& a2) {
    for (const auto& b : hypothesis_bullets(p, a1, a2))
        if (!b.holds) return false;
    return true;
}

inline TheoremIParams dimitra_params(long long m) {
    if (m < 3) throw std::invalid_argument("dimitra_params requires m >= 3");
    return TheoremIParams{2, frac(m, m - 1), 0, 0, frac(2 * m - 2, m + 1), frac(2, m + 1)};
}

enum class LemmaStatus { Holds, PreconditionViolated, ConclusionFailed };

struct Lemma20Report {
    LemmaStatus status = LemmaStatus::Holds;
    std::vector<BulletReport> preconditions;
    std::vector<BulletReport> conclusions;
};

inline Lemma20Report verify_lemma_2_0(const TheoremIParams& p) {
    p.validate();
    Lemma20Report r;
    r.preconditions = parameter_bullets(p);

    const Rational& A = p.A;
    const Rational& B = p.B;
    const Rational& M = p.M;
    const Rational& N = p.N;
    const Rational& al = p.alpha;
    const Rational& be = p.beta;
    r.conclusions = {
        {"A+M >= 1", A + M >= 1},
        {"B > 1", B > 1},
        {"alpha(B+1-MB-N)+beta(A+1-AN-M) >= AB-1",
         al * (B + 1 - M * B - N) + be * (A + 1 - A * N - M) >= A * B - 1},
        {"beta(1-N)+B alpha >= B", be * (1 - N) + B * al >= B},
        {"alpha(2-M)/(A+1)+beta(2-N)/(B+1) >= 1",
         al * (2 - M) / (A + 1) + be * (2 - N) / (B + 1) >= 1},
        {"alpha(2-M)B+beta(1-N)(A+1) >= B(A+1)",
         al * (2 - M) * B + be * (1 - N) * (A + 1) >= B * (A + 1)},
    };
    // Conclusions are always evaluated; a precondition failure takes priority
    // in the status.
    for (const auto& b : r.conclusions)
        if (!b.holds) r.status = LemmaStatus::ConclusionFailed;
    for (const auto& b : r.preconditions)
        if (!b.holds) r.status = LemmaStatus::PreconditionViolated;
    return r;
}

inline bool conclusion_disjunction(const TheoremIParams& p, const Rational& a1, const Rational& a2,
                                   const Rational& mult1, const Rational& mult2) {
    return mult1 >= p.M + p.A * a1 - a2 || mult2 >= p.N + p.B * a2 - a1;
}

// Coefficients of the exceptional curves F_1..F_n of the blow-up tower at
// the crossing of Delta_1 and Delta_2, with a flag for the klt window.
struct ChainState {
    Rational a1, a2;
    Vector mults;
    Vector coeffs;
    std::vector<int> violations;  // 1-based indices i with coeff_i outside [0, 1)

    std::optional<int> first_violation() const {
        if (violations.empty()) return std::nullopt;
        return violations.front();
    }
};

inline ChainState simulate_chain(const Rational& a1, const Rational& a2, const Vector& mults) {
    if (a1 < 0 || a1 >= 1 || a2 < 0 || a2 >= 1)
        throw std::invalid_argument("simulate_chain requires a1, a2 in [0, 1)");
    for (const auto& m : mults)
        if (m < 0) throw std::invalid_argument("multiplicities must be non-negative");
    ChainState s{a1, a2, mults, {}, {}};
    Rational partial = 0;
    for (std::size_t i = 1; i <= mults.size(); ++i) {
        partial += mults[i - 1];
        Rational c = a1 + Rational(static_cast<long long>(i)) * (a2 - 1) + partial;
        if (c < 0 || c >= 1) s.violations.push_back(static_cast<int>(i));
        s.coeffs.push_back(std::move(c));
    }
    return s;
}

// Upper bound (N + B a2)/(1 - a2) on the length of the tower.
inline Rational chain_bound(const TheoremIParams& p, const Rational& a2) {
    if (a2 >= 1) throw std::invalid_argument("chain_bound requires a2 < 1");
    return (p.N + p.B * a2) / (1 - a2);
}

}  // namespace lct
