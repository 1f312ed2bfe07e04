#ifndef SVT_CHECKS_HPP
#define SVT_CHECKS_HPP

#include <string>
#include <vector>

namespace svt {

// Cross-check suite: every closed form, recursion and bijection in the
// library is validated against an independent computation (usually exhaustive
// generation).  Shared by `svt verify` and the acceptance test driver.

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyBounds {
    int sweep_n1 = 4;       // max columns in the two-row density sweeps
    int sweep_entry = 3;    // max per-cell density in sweeps
    int sweep_mass = 12;    // max total mass in sweeps
    int psi_mass = 12;      // mass bound for the path bijection sweep
    int shift_mass = 10;    // mass bound for the density-shift partition sweep
    int raney_rt_mass = 10; // kn+r bound for concat/split round trips
    int raney_conv_n = 8, raney_conv_k = 4, raney_conv_r = 4;
    int raney_svt_mass = 12;   // kn+r bound for the tableau-count comparison
    int catalan_mass = 12;     // kn bound
    int rational_sum = 10;     // a+b bound
    int tennis_mass = 12;      // ns bound
    int tennis_identity_mass = 10;  // sn bound for B_{s,1}(n) = C_{n+1}^s
    int schutz_mass = 12;      // mass bound for the involution sweep

    static VerifyBounds full() { return {}; }
    static VerifyBounds small();
    void cap_mass(int m);  // clamp every mass bound to m
};

CheckResult check_reference_class();
CheckResult check_triple_agreement(const VerifyBounds& b);
CheckResult check_k_catalan(const VerifyBounds& b);
CheckResult check_raney_numbers(const VerifyBounds& b);
CheckResult check_rational_catalan(const VerifyBounds& b);
CheckResult check_tennis(const VerifyBounds& b);
CheckResult check_path_bijection(const VerifyBounds& b);
CheckResult check_density_shift(const VerifyBounds& b);
CheckResult check_raney_bijection(const VerifyBounds& b);
CheckResult check_schutzenberger(const VerifyBounds& b);

std::vector<CheckResult> run_all_checks(const VerifyBounds& b);

}  // namespace svt

#endif
