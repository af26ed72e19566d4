#include "greenbound/selftest.hpp"

#include <cmath>
#include <sstream>

#include "greenbound/f_bound.hpp"
#include "greenbound/green_assembly.hpp"
#include "greenbound/shc_transform.hpp"

namespace greenbound {

namespace {

SelftestCheck near(std::string name, double got, double want, double tol) {
  std::ostringstream os;
  os.precision(10);
  os << "got " << got << ", want " << want << " ± " << tol;
  return {std::move(name), std::abs(got - want) <= tol, os.str()};
}

}  // namespace

std::vector<SelftestCheck> run_selftest() {
  std::vector<SelftestCheck> out;
  const PipelineResult r = example_pipeline(GroupSpec::gamma0(11));
  const double n2 = 121.0;
  out.push_back(near("eps", r.eps, 0.1387, 1e-4));
  out.push_back(near("eps_prime", r.eps_prime, 0.5176, 1e-4));
  out.push_back(near("C_raw", r.C_raw, 136.20, 0.01));
  out.push_back(near("C", r.params.C, 137.0, 0.0));
  out.push_back(near("sup_Y F", r.sup_F_Y_raw, 25.68, 0.01));
  out.push_back(near("S", r.report.S, 172.1, 0.2));
  const CuspReport& zero = r.report.cusps.at(1);  // cusp 0, width 11
  out.push_back(near("T(eps_c)/n^2", zero.T_eps / n2, 0.00313, 1e-5));
  out.push_back(near("T(eps'_c)/n^2", zero.T_eps_prime / n2, 0.0436, 1e-4));
  out.push_back(near("tilde linear coefficient",
                     r.params.minus_one_count * r.eps_prime * r.report.r_delta, 0.0279, 2e-4));
  out.push_back(near("P_{0,2}(3)", legendre_P(0.0, 2.0, 3.0), 0.5, 1e-15));
  out.push_back(near("h(1.44) quadrature vs closed form",
                     shc_transform(RadialKernel::indicator(1.44), 0.0, 2.0),
                     shc_weight2_indicator(1.44), 1e-8));

  bool dominates = true;
  for (int n = 1; n <= 200; ++n) {
    for (Family f : {Family::gamma0, Family::gamma1}) {
      const GroupSpec spec = GroupSpec::make(f, n);
      if (genus(spec) < 1) continue;
      const PipelineResult rn = example_pipeline(spec);
      dominates = dominates && rn.polynomial(n) >= rn.report.sup_bound;
    }
  }
  out.push_back({"sup polynomial dominates every report, n <= 200", dominates, ""});
  return out;
}

}  // namespace greenbound
