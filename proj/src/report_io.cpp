#include "greenbound/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "greenbound/errors.hpp"

namespace greenbound {

using nlohmann::json;

namespace {

std::string format_rounded(double v) {
  if (v == 0.0) return "0";
  if (!std::isfinite(v)) return std::to_string(v);
  const int e = static_cast<int>(std::floor(std::log10(std::abs(v))));
  const int decimals = std::max(0, 2 - e);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

std::string display_up(double v) { return format_rounded(round_up_sig(v, 3)); }
std::string display_down(double v) { return format_rounded(round_down_sig(v, 3)); }

std::string to_string(ConstantsMode m) { return m == ConstantsMode::paper ? "paper" : "computed"; }

ConstantsMode parse_constants_mode(const std::string& s) {
  if (s == "paper") return ConstantsMode::paper;
  if (s == "computed") return ConstantsMode::computed;
  throw DomainError("constants mode must be 'paper' or 'computed'");
}

void to_json(json& j, const Interval& v) { j = json{{"lo", v.lo}, {"hi", v.hi}}; }
void from_json(const json& j, Interval& v) {
  v = Interval::make(j.at("lo").get<double>(), j.at("hi").get<double>());
}

void to_json(json& j, const CuspReport& v) {
  j = json{{"label", v.label},
           {"width", v.width},
           {"eps", v.eps},
           {"eps_prime", v.eps_prime},
           {"T_eps", v.T_eps},
           {"T_eps_prime", v.T_eps_prime},
           {"tilde_A", v.tilde_A},
           {"tilde_B", v.tilde_B},
           {"regime_b", v.regime_b},
           {"regime_d", v.regime_d},
           {"regime_d_sup", v.regime_d_sup}};
}
void from_json(const json& j, CuspReport& v) {
  j.at("label").get_to(v.label);
  j.at("width").get_to(v.width);
  j.at("eps").get_to(v.eps);
  j.at("eps_prime").get_to(v.eps_prime);
  j.at("T_eps").get_to(v.T_eps);
  j.at("T_eps_prime").get_to(v.T_eps_prime);
  j.at("tilde_A").get_to(v.tilde_A);
  j.at("tilde_B").get_to(v.tilde_B);
  j.at("regime_b").get_to(v.regime_b);
  j.at("regime_d").get_to(v.regime_d);
  j.at("regime_d_sup").get_to(v.regime_d_sup);
}

void to_json(json& j, const BoundReport& v) {
  j = json{{"S", v.S},
           {"r_delta", v.r_delta},
           {"zeta_over_eta", v.zeta_over_eta},
           {"int_h_lo", v.int_h.lo},
           {"int_h_hi", v.int_h.hi},
           {"regime_a_lo", v.regime_a.lo},
           {"regime_a_hi", v.regime_a.hi},
           {"regime_b_lo", v.regime_b.lo},
           {"regime_b_hi", v.regime_b.hi},
           {"regime_c_lo", v.regime_c.lo},
           {"regime_c_hi", v.regime_c.hi},
           {"regime_d_lo", v.regime_d.lo},
           {"regime_d_hi", v.regime_d.hi},
           {"cusps", v.cusps},
           {"sup_bound", v.sup_bound}};
}
void from_json(const json& j, BoundReport& v) {
  auto interval = [&](const char* lo, const char* hi) {
    return Interval::make(j.at(lo).get<double>(), j.at(hi).get<double>());
  };
  j.at("S").get_to(v.S);
  j.at("r_delta").get_to(v.r_delta);
  j.at("zeta_over_eta").get_to(v.zeta_over_eta);
  v.int_h = interval("int_h_lo", "int_h_hi");
  v.regime_a = interval("regime_a_lo", "regime_a_hi");
  v.regime_b = interval("regime_b_lo", "regime_b_hi");
  v.regime_c = interval("regime_c_lo", "regime_c_hi");
  v.regime_d = interval("regime_d_lo", "regime_d_hi");
  j.at("cusps").get_to(v.cusps);
  j.at("sup_bound").get_to(v.sup_bound);
}

void to_json(json& j, const CountCertificate& v) {
  j = json{{"threshold", v.threshold},
           {"grid_step", v.grid_step},
           {"certified_sup", v.certified_sup},
           {"max_sample", v.max_sample},
           {"cells", v.cells}};
}
void from_json(const json& j, CountCertificate& v) {
  j.at("threshold").get_to(v.threshold);
  j.at("grid_step").get_to(v.grid_step);
  j.at("certified_sup").get_to(v.certified_sup);
  j.at("max_sample").get_to(v.max_sample);
  j.at("cells").get_to(v.cells);
}

void to_json(json& j, const FBoundResult& v) {
  j = json{{"a", v.a}, {"N_used", v.N_used}, {"sup_Y", v.sup_Y}, {"sup_X", v.sup_X},
           {"zeta", v.zeta}};
}
void from_json(const json& j, FBoundResult& v) {
  j.at("a").get_to(v.a);
  j.at("N_used").get_to(v.N_used);
  j.at("sup_Y").get_to(v.sup_Y);
  j.at("sup_X").get_to(v.sup_X);
  j.at("zeta").get_to(v.zeta);
}

void to_json(json& j, const SupPolynomial& v) { j = json{{"c0", v.c0}, {"c1", v.c1}, {"c2", v.c2}}; }
void from_json(const json& j, SupPolynomial& v) {
  j.at("c0").get_to(v.c0);
  j.at("c1").get_to(v.c1);
  j.at("c2").get_to(v.c2);
}

void to_json(json& j, const CuspParams& v) {
  j = json{{"label", v.label}, {"width", v.width}, {"eps", v.eps}, {"eps_prime", v.eps_prime},
           {"min_c", v.min_c}};
}
void from_json(const json& j, CuspParams& v) {
  j.at("label").get_to(v.label);
  j.at("width").get_to(v.width);
  j.at("eps").get_to(v.eps);
  j.at("eps_prime").get_to(v.eps_prime);
  j.at("min_c").get_to(v.min_c);
}

void to_json(json& j, const BoundParams& v) {
  j = json{{"delta", v.delta}, {"eta", v.eta},         {"A", v.A},
           {"B", v.B},         {"C", v.C},             {"sup_F_Y", v.sup_F_Y},
           {"sup_F_X", v.sup_F_X}, {"genus", v.genus}, {"volume", v.volume},
           {"zeta", v.zeta},   {"minus_one_count", v.minus_one_count}, {"cusps", v.cusps}};
}
void from_json(const json& j, BoundParams& v) {
  j.at("delta").get_to(v.delta);
  j.at("eta").get_to(v.eta);
  j.at("A").get_to(v.A);
  j.at("B").get_to(v.B);
  j.at("C").get_to(v.C);
  j.at("sup_F_Y").get_to(v.sup_F_Y);
  j.at("sup_F_X").get_to(v.sup_F_X);
  j.at("genus").get_to(v.genus);
  j.at("volume").get_to(v.volume);
  j.at("zeta").get_to(v.zeta);
  j.at("minus_one_count").get_to(v.minus_one_count);
  j.at("cusps").get_to(v.cusps);
}

json pipeline_document(const PipelineResult& r) {
  json doc = r.report;
  doc["schema"] = kJsonSchemaVersion;
  doc["kind"] = "bound";
  doc["provenance"] = to_string(r.mode);
  doc["group"] = {{"family", std::string(to_string(r.spec.family))},
                  {"level", r.spec.level},
                  {"name", r.spec.name()},
                  {"genus", r.genus},
                  {"genus_used", r.genus_used},
                  {"index", index_in_sl2z(r.spec)},
                  {"psl_index", index_in_psl2z(r.spec)},
                  {"volume", r.volume},
                  {"minus_one_count", minus_one_count(r.spec)}};
  doc["inputs"] = r.params;
  doc["counts"] = {{"sup_N17", r.sup_N17},
                   {"sup_N_small", r.sup_N_small},
                   {"small_threshold", r.small_threshold}};
  if (r.count17) doc["counts"]["certificate17"] = *r.count17;
  if (r.count_small) doc["counts"]["certificate_small"] = *r.count_small;
  doc["eps"] = r.eps;
  doc["eps_prime"] = r.eps_prime;
  doc["C_raw"] = r.C_raw;
  doc["sup_F_Y_raw"] = r.sup_F_Y_raw;
  doc["f_bound"] = r.f;
  doc["zeta_coarse"] = r.zeta_coarse;
  doc["zeta_genus"] = r.zeta_genus;
  doc["global_sup_polynomial"] = r.polynomial;

  json disp = {{"S", display_up(r.report.S)},
               {"C", display_up(r.params.C)},
               {"sup_F_Y", display_up(r.params.sup_F_Y)},
               {"sup_F_X", display_up(r.params.sup_F_X)},
               {"zeta", display_up(r.params.zeta)},
               {"r_delta", display_up(r.report.r_delta)},
               {"sup_bound", display_up(r.report.sup_bound)},
               {"global_sup_polynomial",
                {display_up(r.polynomial.c0), display_up(r.polynomial.c1),
                 display_up(r.polynomial.c2)}}};
  for (const char* regime : {"a", "b", "c", "d"}) {
    const std::string key = std::string("regime_") + regime;
    disp[key + "_lo"] = display_down(doc[key + "_lo"].get<double>());
    disp[key + "_hi"] = display_up(doc[key + "_hi"].get<double>());
  }
  json cusps = json::array();
  for (const CuspReport& c : r.report.cusps) {
    cusps.push_back({{"label", c.label},
                     {"T_eps", display_up(c.T_eps)},
                     {"T_eps_prime", display_up(c.T_eps_prime)},
                     {"tilde_A", display_down(c.tilde_A)},
                     {"tilde_B", display_up(c.tilde_B)}});
  }
  disp["cusps"] = cusps;
  doc["display"] = disp;
  return doc;
}

}  // namespace greenbound
