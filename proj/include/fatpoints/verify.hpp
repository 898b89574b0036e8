#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fatpoints/geometry.hpp"

namespace fatpoints {

enum class Verdict { holds, violated, inapplicable };
const char* to_string(Verdict v);

/// One checked instance of a claim. Violated records always carry the full
/// scheme inline; in fact every record that got as far as building a scheme
/// does, so any line of the log can be replayed.
struct VerificationRecord {
    std::uint64_t id = 0;
    std::string claim;
    std::string descriptor;
    nlohmann::ordered_json params;  // claim-specific inputs, enough to replay
    std::uint64_t seed = 0;
    std::uint32_t prime = kDefaultPrime;
    std::int64_t predicted = 0;
    std::int64_t measured = 0;
    Verdict verdict = Verdict::inapplicable;
    std::string detail;
    std::optional<FatPointScheme> scheme;
    std::string timestamp;
};

nlohmann::ordered_json record_to_json(const VerificationRecord& rec);
VerificationRecord record_from_json(const nlohmann::ordered_json& j);

/// reg(Z) <= max T(Z,L): holds iff the measured regularity index stays
/// under the generalized Segre bound.
VerificationRecord check_generalized_segre(const FatPointScheme& Z);

/// The h1-vanishing conjecture for arbitrary points: evaluates
///   (1) w(Z) <= nd+1,
///   (2) w_L(Z) <= d+1 for every line,
///   (3) w_L(Z) <= rd+2 for every r-subspace, 2 <= r <= n-1, with
///       h1(L, I_{Z cap L}(d)) = 0 required when equality holds,
/// and, when all conditions pass, compares the measured h1(I_Z(d)) against
/// the predicted 0. A failed condition yields `inapplicable` naming it.
/// Requires d >= 2, n > 2.
VerificationRecord check_segre_vanishing_conjecture(const FatPointScheme& Z, int d);

/// Speciality criterion for w = nd+2 on many points: under the hypotheses
/// d >= 4, d >= m1+2, s >= 2n+3, sum m_i = nd+2, m1+m_{2n+2} <= d,
/// m1+m2 <= d+1, linearly general points have h1(I_Z(d)) = 0 iff the
/// support is NOT on a rational normal curve. Points are generated on the
/// curve when on_rnc is set, linearly general otherwise.
VerificationRecord check_rnc_speciality(const FieldContext& F, int n, int d,
                                        std::vector<int> mults, bool on_rnc,
                                        std::uint64_t seed);

/// Points on a rational normal curve achieve the Segre bound exactly.
VerificationRecord check_rnc_sharpness(const FieldContext& F, int n, int s,
                                       std::vector<int> mults, std::uint64_t seed);

/// The seven-point configuration in P^4 with all multiplicities a and
/// d = 2a-1: h1 vanishes for a >= 3 and is positive for a = 2.
VerificationRecord check_seven_point_base(const FieldContext& F, int a);

/// Cone configuration: h1(I_Z(d)) = 1 exactly.
VerificationRecord check_cone_speciality(const FieldContext& F, int n, int d,
                                         std::uint64_t seed);

/// Re-runs the checker on the record's inline scheme and parameters.
/// Reproduces identical verdict and measured values for any logged record.
VerificationRecord replay(const VerificationRecord& logged);

struct SweepPlan {
    std::string claim = "generalized-segre";
    std::uint32_t prime = kDefaultPrime;
    std::vector<int> ns;                  // claim default when empty
    int records = 100;                    // per-claim meaning, see sweep()
    std::uint64_t master_seed = 1;
    int max_mult = 5;
    std::vector<std::string> geometries;  // claim default when empty
    std::vector<int> degrees;             // rnc-speciality degrees
    int seeds_on = 20;                    // rnc-speciality on-curve instances
    int seeds_per_case = 0;               // 0 = claim default
    bool fatal_violations = true;         // violations fail the process
    std::string timestamp;
};

struct SweepResult {
    std::vector<VerificationRecord> records;  // canonical order (by id)
    std::size_t holds = 0;
    std::size_t violated = 0;
    std::size_t inapplicable = 0;

    bool ok() const { return violated == 0; }
};

/// Runs the plan's claim over deterministically derived per-record seeds.
/// Records are computed in parallel and returned sorted by id; the output
/// is independent of scheduling.
SweepResult sweep(const SweepPlan& plan);

std::vector<std::string> sweep_claims();

void write_record_log(const SweepResult& result, const std::string& path);
nlohmann::ordered_json sweep_summary(const SweepPlan& plan, const SweepResult& result);

}  // namespace fatpoints
