// Acceptance / verification suite: the twelve primary criteria plus the
// structural property checks, shared by the `verify` CLI subcommand and the
// acceptance test binary.
#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "qr/closed_form.hpp"
#include "qr/fidelity.hpp"
#include "qr/io.hpp"
#include "qr/mc_advantage.hpp"
#include "qr/multiblock.hpp"

namespace qr::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

inline std::vector<Mat2> kraus_of(const ProtocolSpec& spec, bool* cptp = nullptr) {
  if (cptp) *cptp = true;
  if (spec.mode == Mode::MultipathTDTC) {
    std::vector<Mat2> ks;
    for (const auto& br : run_tdtc(spec)) ks.push_back(br.K);
    return ks;
  }
  const SinglePathResult r = spec.mode == Mode::SinglePathMixed
                                 ? run_single_path_mixed(spec)
                                 : run_single_path(spec);
  if (cptp) *cptp = r.cptp;
  return r.kraus;
}

inline double tdtc_fidelity(const ProtocolSpec& spec) {
  return avg_fidelity(run_tdtc(spec));
}

// Table V per-branch fidelity entry (x8 normalization of the paper) for
// input |psi> = sqrt(A)|0> + sqrt(1-A)|1>.
inline double tablev_entry(bool alice_phi, int c1, int c2, double al,
                           double be, double A) {
  const double g = 1.0 - al - be, B = 1.0 - A;
  const bool c1p = bell_is_psi(c1), c2p = bell_is_psi(c2);
  if (c1p != c2p) return c1p ? be * g : al * g;
  const bool mismatch = bell_is_minus(c1) != bell_is_minus(c2);
  if (!c1p) {  // both phi-class
    const double s = mismatch ? al - be : al + be;
    const double v = alice_phi ? A * s + B * g : A * g + B * s;
    return v * v;
  }
  // both psi-class
  if (mismatch) return 0.0;
  const double w = alice_phi ? A : B;
  return 4.0 * al * be * w * w;
}

// Deterministic random protocol configuration.  With cptp_only the gW
// noisy single-path effective classes (bit flip, bit-phase flip, amplitude
// damping), which are fidelity-exact but not trace-preserving, are avoided.
inline ProtocolSpec random_spec(Rng& rng, bool cptp_only) {
  ProtocolSpec s;
  s.channel.family = rng.next_double() < 0.5 ? Family::GGHZ : Family::GW;
  if (s.channel.family == Family::GGHZ) {
    s.channel.alpha = 0.05 + 0.9 * rng.next_double();
  } else {
    double u = 0.9 * rng.next_double() + 0.05, v = 0.9 * rng.next_double() + 0.05;
    if (u + v > 0.98) {
      u *= 0.45;
      v *= 0.45;
    }
    s.channel.alpha = u;
    s.channel.beta = v;
  }
  const double um = rng.next_double();
  s.mode = um < 0.5 ? Mode::MultipathTDTC
                    : (um < 0.85 ? Mode::SinglePathMeasured
                                 : Mode::SinglePathMixed);
  static const NoiseModel kModels[6] = {
      NoiseModel::None,         NoiseModel::BitFlip,
      NoiseModel::PhaseFlip,    NoiseModel::BitPhaseFlip,
      NoiseModel::AmplitudeDamping, NoiseModel::PhaseDamping};
  s.noise = kModels[rng.next_u64() % 6];
  s.p1 = s.p2 = 0.05 + 0.9 * rng.next_double();
  if (s.mode == Mode::SinglePathMixed) s.noise = NoiseModel::None;
  if (cptp_only && s.channel.family == Family::GW &&
      s.mode == Mode::SinglePathMeasured &&
      (s.noise == NoiseModel::BitFlip || s.noise == NoiseModel::BitPhaseFlip ||
       s.noise == NoiseModel::AmplitudeDamping)) {
    s.noise = NoiseModel::PhaseFlip;
  }
  if (s.mode == Mode::SinglePathMeasured) {
    if (s.channel.family == Family::GGHZ)
      s.c2_basis = s.noise == NoiseModel::None && rng.next_double() < 0.5
                       ? mbasis(rng.next_double(),
                                2.0 * M_PI * rng.next_double())
                       : plus_minus_basis();
    else
      s.c2_basis = computational_basis();
  }
  if (s.channel.family == Family::GGHZ && s.mode == Mode::MultipathTDTC &&
      (s.noise == NoiseModel::BitFlip || s.noise == NoiseModel::BitPhaseFlip) &&
      rng.next_double() < 0.5) {
    s.policy = s.noise == NoiseModel::BitFlip
                   ? CorrectionPolicy::BitFlipRectify
                   : CorrectionPolicy::BitPhaseFlipRectify;
  }
  return s;
}

}  // namespace detail

inline CriterionResult criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  double maxerr = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double a = i / 10.0;
    ProtocolSpec s;
    s.channel = {Family::GGHZ, a, 0.0, 0.0};
    maxerr = std::max(maxerr,
                      std::abs(detail::tdtc_fidelity(s) - cf::eq9_gghz_tdtc(a)));
  }
  ProtocolSpec half;
  half.channel = {Family::GGHZ, 0.5, 0.0, 0.0};
  const double f_half = detail::tdtc_fidelity(half);
  const double ms = detail::ms_since(t0);
  CriterionResult r{1, "noiseless gGHZ TD-TC matches Eq. 9", false, ""};
  r.passed = maxerr < kTolFormula && std::abs(f_half - 1.0) < kTolFormula &&
             ms < 1000.0;
  std::ostringstream os;
  os << "max|sim-Eq9|=" << io::fmt(maxerr, 6) << ", F(1/2)=" << io::fmt(f_half, 6)
     << ", runtime=" << io::fmt(ms, 4) << "ms";
  r.detail = os.str();
  return r;
}

inline CriterionResult criterion2() {
  double maxerr = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double a = i / 10.0;
    for (int j = 0; j < 8; ++j) {
      const double phi = j * M_PI / 8.0 + 0.1;
      ProtocolSpec s;
      s.channel = {Family::GGHZ, a, 0.0, phi};
      s.phase_absorption = false;
      maxerr = std::max(maxerr, std::abs(detail::tdtc_fidelity(s) -
                                         cf::eq8_gghz_phase(a, phi)));
    }
  }
  CriterionResult r{2, "phase dependence matches Eq. 8 (absorption off)",
                    maxerr < kTolFormula, "max err = " + io::fmt(maxerr, 6)};
  return r;
}

inline CriterionResult criterion3() {
  double maxerr = 0.0;
  Rng rng(12345);
  for (int i = 0; i < 50; ++i) {
    double u = rng.next_double(), v = rng.next_double();
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    u = std::max(u, 1e-3);
    v = std::max(v, 1e-3);
    if (u + v >= 0.999) continue;
    ProtocolSpec s;
    s.channel = {Family::GW, u, v, 0.0};
    maxerr = std::max(maxerr, std::abs(detail::tdtc_fidelity(s) -
                                       cf::eq12_gw_tdtc(u, v)));
  }
  // Table V per-branch fidelity entries at 5 parameter points.
  double tverr = 0.0;
  const double pts[5][2] = {
      {0.4, 0.2}, {0.2, 0.3}, {1.0 / 3, 1.0 / 3}, {0.1, 0.7}, {0.6, 0.1}};
  for (const auto& pt : pts) {
    ProtocolSpec s;
    s.channel = {Family::GW, pt[0], pt[1], 0.0};
    for (const auto& br : run_tdtc(s)) {
      for (const double A : {0.25, 0.7}) {
        Vec2 psi;
        psi << std::sqrt(A), std::sqrt(1.0 - A);
        const double got = std::norm(psi.dot(br.K * psi)) * 8.0;
        const double want = detail::tablev_entry(!bell_is_psi(br.a), br.c1,
                                                 br.c2, pt[0], pt[1], A);
        tverr = std::max(tverr, std::abs(got - want));
      }
    }
  }
  CriterionResult r{3, "noiseless gW TD-TC matches Eq. 12 and Table V",
                    maxerr < kTolFormula && tverr < 1e-10,
                    "max|sim-Eq12|=" + io::fmt(maxerr, 6) +
                        ", max Table V entry err=" + io::fmt(tverr, 6)};
  return r;
}

inline CriterionResult criterion4() {
  // gGHZ measured single path at the {|+>,|->} basis vs Eq. 19.
  double e19 = 0.0;
  for (const double a : {0.2, 0.35, 0.5, 0.7, 0.9}) {
    ProtocolSpec s;
    s.channel = {Family::GGHZ, a, 0.0, 0.0};
    s.mode = Mode::SinglePathMeasured;
    s.c2_basis = plus_minus_basis();
    e19 = std::max(e19, std::abs(avg_fidelity(run_single_path(s).kraus) -
                                 cf::eq19_gghz_single(a)));
  }
  // basis optimizer: x* = 1/2
  ProtocolSpec sg;
  sg.channel = {Family::GGHZ, 0.3, 0.0, 0.0};
  sg.mode = Mode::SinglePathMeasured;
  const auto opt = optimize_basis(
      [&](double x, double th) {
        ProtocolSpec s = sg;
        s.c2_basis = mbasis(x, th);
        return avg_fidelity(run_single_path(s).kraus);
      },
      21);
  const double xerr = std::abs(opt.x - 0.5);
  // gW computational basis vs Eq. 23, mixed variant vs Eq. 24.
  double e23 = 0.0, e24 = 0.0;
  const double pts[4][2] = {{0.2, 0.3}, {1.0 / 3, 1.0 / 3}, {0.1, 0.6}, {0.5, 0.2}};
  for (const auto& pt : pts) {
    ProtocolSpec s;
    s.channel = {Family::GW, pt[0], pt[1], 0.0};
    s.mode = Mode::SinglePathMeasured;
    s.c2_basis = computational_basis();
    e23 = std::max(e23, std::abs(avg_fidelity(run_single_path(s).kraus) -
                                 cf::eq23_gw_single(pt[0], pt[1])));
    e24 = std::max(e24, std::abs(avg_fidelity(run_single_path_mixed(s).kraus) -
                                 cf::eq24_gw_mixed(pt[0], pt[1])));
  }
  // per-hop basis optimum vs f_max^gW
  double ef = 0.0;
  const double hpts[3][2] = {{0.2, 0.3}, {0.4, 0.25}, {0.15, 0.5}};
  for (const auto& pt : hpts) {
    const ChannelParams cp{Family::GW, pt[0], pt[1], 0.0};
    const Vec chan = make_channel_state(cp);
    const auto hop_obj = [&](double x, double th) {
      double total = 0.0;
      for (const Vec& v : mbasis(x, th)) {
        const Vec ch = project_out(chan, v, {2}, 3);
        const double w = ch.squaredNorm();
        if (w < 1e-14) continue;
        total += w * fidelity_from_F(singlet_fraction(schmidt(ch / std::sqrt(w))));
      }
      return total;
    };
    const auto ho = optimize_basis(hop_obj, 41);
    ef = std::max(ef, std::abs(ho.value - cf::fmax_gw_single(pt[0], pt[1])));
  }
  CriterionResult r{4, "single-path fidelities (Eqs. 19/23/24, basis optimum)",
                    e19 < kTolFormula && xerr < 1e-6 && e23 < kTolFormula &&
                        e24 < kTolFormula && ef < 1e-6,
                    "Eq19 err=" + io::fmt(e19, 4) + ", |x*-1/2|=" +
                        io::fmt(xerr, 4) + ", Eq23 err=" + io::fmt(e23, 4) +
                        ", Eq24 err=" + io::fmt(e24, 4) +
                        ", f_max err=" + io::fmt(ef, 4)};
  return r;
}

inline CriterionResult criterion5() {
  const double a = 1.0 / 3.0;
  ProtocolSpec s;
  s.channel = {Family::GW, a, a, 0.0};
  const double fdc = detail::tdtc_fidelity(s);
  s.mode = Mode::SinglePathMeasured;
  s.c2_basis = computational_basis();
  const double fl2 = avg_fidelity(run_single_path(s).kraus);
  const double adv = (fdc - fl2) / fl2 * 100.0;
  const bool ok = std::abs(fdc - 8.0 / 9.0) < 1e-12 &&
                  std::abs(fl2 - 22.0 / 27.0) < 1e-12 && adv >= 9.09;
  CriterionResult r{5, "W-state theorem: F=8/9 vs 22/27", ok,
                    "F_tdtc=" + io::fmt(fdc) + ", F_single=" + io::fmt(fl2) +
                        ", advantage=" + io::fmt(adv, 6) + "%"};
  return r;
}

inline CriterionResult criterion6() {
  double maxerr = 0.0;
  std::string worst;
  auto upd = [&](double err, const std::string& tag) {
    if (err > maxerr) {
      maxerr = err;
      worst = tag;
    }
  };
  const double ps[5] = {0.1, 0.3, 0.5, 0.7, 0.9};
  // Table III, gGHZ
  for (const double a : {0.2, 0.5, 0.8}) {
    for (const double p : ps) {
      ProtocolSpec s;
      s.channel = {Family::GGHZ, a, 0.0, 0.0};
      s.p1 = s.p2 = p;
      // multipath: bit flip / bit-phase flip cells use the bit-flip
      // rectifier (Section V.A); the others use the plain table.
      for (const NoiseModel n :
           {NoiseModel::BitFlip, NoiseModel::PhaseFlip, NoiseModel::BitPhaseFlip,
            NoiseModel::AmplitudeDamping, NoiseModel::PhaseDamping}) {
        s.noise = n;
        s.policy = (n == NoiseModel::BitFlip || n == NoiseModel::BitPhaseFlip)
                       ? CorrectionPolicy::BitFlipRectify
                       : CorrectionPolicy::Noiseless;
        upd(std::abs(detail::tdtc_fidelity(s) - cf::table3_multipath(n, a, p)),
            "III-mp " + noise_name(n));
      }
      // single path (the bit-flip cell is the reconciled expression)
      s.mode = Mode::SinglePathMeasured;
      s.policy = CorrectionPolicy::Noiseless;
      s.c2_basis = plus_minus_basis();
      for (const NoiseModel n :
           {NoiseModel::BitFlip, NoiseModel::PhaseFlip, NoiseModel::BitPhaseFlip,
            NoiseModel::AmplitudeDamping, NoiseModel::PhaseDamping}) {
        s.noise = n;
        upd(std::abs(avg_fidelity(run_single_path(s).kraus) -
                     cf::table3_single(n, a, p)),
            "III-sp " + noise_name(n));
      }
    }
  }
  // Table IV, gW
  const double pts[3][2] = {{0.2, 0.3}, {1.0 / 3, 1.0 / 3}, {0.5, 0.2}};
  for (const auto& pt : pts) {
    for (const double p : ps) {
      ProtocolSpec s;
      s.channel = {Family::GW, pt[0], pt[1], 0.0};
      s.p1 = s.p2 = p;
      for (const NoiseModel n :
           {NoiseModel::BitFlip, NoiseModel::PhaseFlip, NoiseModel::BitPhaseFlip,
            NoiseModel::AmplitudeDamping, NoiseModel::PhaseDamping}) {
        s.noise = n;
        s.mode = Mode::MultipathTDTC;
        upd(std::abs(detail::tdtc_fidelity(s) -
                     cf::table4_multipath(n, pt[0], pt[1], p)),
            "IV-mp " + noise_name(n));
        s.mode = Mode::SinglePathMeasured;
        s.c2_basis = computational_basis();
        upd(std::abs(avg_fidelity(run_single_path(s).kraus) -
                     cf::table4_single(n, pt[0], pt[1], p)),
            "IV-sp " + noise_name(n));
      }
    }
  }
  CriterionResult r{6, "noise tables III and IV reproduced", maxerr < kTolFormula,
                    "max cell err=" + io::fmt(maxerr, 6) + " (" + worst +
                        "); Table III single-path bit-flip cell is garbled in "
                        "print — reconciled expression 2/3 + 4/3 a(1-a) "
                        "(p-independent) matches simulation"};
  return r;
}

inline CriterionResult criterion7() {
  double maxerr = 0.0;
  for (const double a : {0.2, 0.5, 0.8}) {
    for (const double p : {0.1, 0.4, 0.7}) {
      ProtocolSpec s;
      s.channel = {Family::GGHZ, a, 0.0, 0.0};
      s.p1 = s.p2 = p;
      s.noise = NoiseModel::BitFlip;
      s.policy = CorrectionPolicy::BitFlipRectify;
      maxerr = std::max(maxerr, std::abs(detail::tdtc_fidelity(s) -
                                         cf::eq9_gghz_tdtc(a)));
      s.noise = NoiseModel::BitPhaseFlip;
      s.policy = CorrectionPolicy::BitPhaseFlipRectify;
      maxerr = std::max(maxerr, std::abs(detail::tdtc_fidelity(s) -
                                         cf::eq9_gghz_tdtc(a)));
    }
  }
  // outcome-correlation classifier (flips classified on the flipped component)
  auto branches = [](NoiseModel n) {
    ProtocolSpec s;
    s.channel = {Family::GGHZ, 0.3, 0.0, 0.0};
    s.noise = n;
    s.p1 = s.p2 = 0.3;
    return run_tdtc(s);
  };
  const bool classes_ok =
      detect_noise_class(branches(NoiseModel::None)) ==
          NoiseClass::SameBellClass &&
      detect_noise_class(branches(NoiseModel::PhaseFlip)) ==
          NoiseClass::SameBellClass &&
      detect_noise_class(flip_component_branches(branches(
          NoiseModel::BitFlip))) == NoiseClass::OppositeBellClass &&
      detect_noise_class(flip_component_branches(branches(
          NoiseModel::BitPhaseFlip))) == NoiseClass::OppositeBellClass &&
      detect_noise_class(branches(NoiseModel::AmplitudeDamping)) ==
          NoiseClass::Mixed;
  CriterionResult r{7, "rectification restores Eq. 9; noise classifier",
                    maxerr < kTolFormula && classes_ok,
                    "max rectified err=" + io::fmt(maxerr, 4) +
                        ", classifier=" + (classes_ok ? "ok" : "WRONG")};
  return r;
}

inline CriterionResult criterion8() {
  const auto t0 = std::chrono::steady_clock::now();
  AdvantageSpec a;
  a.family = Family::GW;
  a.p = 0.3;
  a.n_samples = 1000000;
  a.seed = 20260823;
  auto run = [&](NoiseModel n, bool noiseless_base) {
    AdvantageSpec s = a;
    s.noise = n;
    s.noiseless_single_baseline = noiseless_base;
    return mc_advantage(s).advantage_pct;
  };
  const double pf = run(NoiseModel::PhaseFlip, false);
  const double pd = run(NoiseModel::PhaseDamping, false);
  const double bf = run(NoiseModel::BitFlip, false);
  const double bpf = run(NoiseModel::BitPhaseFlip, false);
  // The paper's amplitude-damping percentage corresponds to comparing the
  // noisy multipath run against the noiseless single-path baseline; the
  // strictly noisy-vs-noisy figure is reported alongside.
  const double ad = run(NoiseModel::AmplitudeDamping, true);
  const double ad_strict = run(NoiseModel::AmplitudeDamping, false);
  const double ms = detail::ms_since(t0);
  const bool ok = std::abs(pf - 92.6) <= 2.0 && std::abs(pd - 80.3) <= 2.0 &&
                  std::abs(bf - 9.1) <= 2.0 && std::abs(bpf - 9.1) <= 2.0 &&
                  std::abs(ad - 41.9) <= 2.0 && ms < 300000.0;
  CriterionResult r{8, "Monte Carlo advantage percentages at p=0.3", ok,
                    "pf=" + io::fmt(pf, 4) + "%, pd=" + io::fmt(pd, 4) +
                        "%, bf=" + io::fmt(bf, 4) + "%, bpf=" + io::fmt(bpf, 4) +
                        "%, ad(noiseless-single baseline)=" + io::fmt(ad, 4) +
                        "%, ad(strict noisy-vs-noisy)=" + io::fmt(ad_strict, 4) +
                        "%, runtime=" + io::fmt(ms, 4) + "ms"};
  return r;
}

inline CriterionResult criterion9() {
  double err = 0.0;
  for (int m = 1; m <= 4; ++m) {
    for (const double a : {0.2, 0.3, 0.45, 0.5, 0.7}) {
      ProtocolSpec s;
      s.channel = {Family::GGHZ, a, 0.0, 0.0};
      err = std::max(err, std::abs(multiblock_fidelity(s, m) -
                                   cf::eq26_gghz_mblock(a, m)));
    }
    const double pts[5][2] = {
        {0.2, 0.3}, {1.0 / 3, 1.0 / 3}, {0.45, 0.1}, {0.1, 0.6}, {0.3, 0.2}};
    for (const auto& pt : pts) {
      ProtocolSpec s;
      s.channel = {Family::GW, pt[0], pt[1], 0.0};
      err = std::max(err, std::abs(multiblock_fidelity(s, m) -
                                   cf::eq28_gw_mblock(pt[0], pt[1], m)));
    }
  }
  // Eq. 27 == Eq. 26; Eq. 29 reduces to Eq. 23 at m=1.
  double ident = 0.0;
  for (const double a : {0.1, 0.33, 0.5, 0.8})
    for (int m = 1; m <= 6; ++m)
      ident = std::max(ident, std::abs(cf::eq27_gghz_single_mblock(a, m) -
                                       cf::eq26_gghz_mblock(a, m)));
  ident = std::max(ident, std::abs(cf::eq29_gw_single_mblock(0.2, 0.3, 1) -
                                   cf::eq23_gw_single(0.2, 0.3)));
  // advantage (Eq. 28 - Eq. 29) non-increasing in m at 10 fixed points
  const double fix[10][2] = {{0.05, 0.05}, {0.1, 0.1},  {0.15, 0.1},
                             {0.2, 0.05},  {0.3, 0.05}, {0.4, 0.4},
                             {0.45, 0.3},  {0.5, 0.2},  {0.5, 0.25},
                             {0.45, 0.45}};
  bool mono = true;
  for (const auto& pt : fix) {
    double prev = 1e300;
    for (int m = 1; m <= 6; ++m) {
      const double adv = cf::eq28_gw_mblock(pt[0], pt[1], m) -
                         cf::eq29_gw_single_mblock(pt[0], pt[1], m);
      if (adv > prev + 1e-12) mono = false;
      prev = adv;
    }
  }
  CriterionResult r{9, "multi-block composition matches Eqs. 26/28",
                    err < kTolFormula && ident < 1e-12 && mono,
                    "max composed err=" + io::fmt(err, 4) +
                        ", identity err=" + io::fmt(ident, 4) +
                        ", advantage non-increasing=" + (mono ? "yes" : "NO")};
  return r;
}

inline CriterionResult criterion10() {
  double err = 0.0;
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) {
      const double a1 = i / 10.0, a2 = j / 10.0;
      err = std::max(err, std::abs(heterogeneous_chain_sim(a1, a2) -
                                   cf::eqA3_hetero_chain(a1, a2)));
    }
  CriterionResult r{10, "heterogeneous two-hop chain matches Eq. A3",
                    err < kTolFormula, "max err=" + io::fmt(err, 6)};
  return r;
}

inline CriterionResult criterion11() {
  Rng rng(777);
  double worst_sigmas = 0.0;
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    const ProtocolSpec s = detail::random_spec(rng, false);
    const auto ks = choi_compress(detail::kraus_of(s));
    const double exact = avg_fidelity(ks);
    const McEstimate mc = mc_fidelity(ks, 100000, 1000 + i);
    const double slack = std::max(4.0 * mc.std_error, 1e-9);
    const double diff = std::abs(mc.estimate - exact);
    if (diff > slack) ok = false;
    if (mc.std_error > 0.0)
      worst_sigmas = std::max(worst_sigmas, diff / mc.std_error);
  }
  CriterionResult r{11, "trace-formula fidelity agrees with Monte Carlo", ok,
                    "worst deviation = " + io::fmt(worst_sigmas, 4) +
                        " standard errors over 20 random configurations"};
  return r;
}

inline CriterionResult criterion12() {
  Rng rng(4242);
  double worst_dev = 0.0, fmin = 1.0, fmax = 0.0;
  for (int i = 0; i < 200; ++i) {
    const ProtocolSpec s = detail::random_spec(rng, true);
    bool cptp = true;
    const auto ks = detail::kraus_of(s, &cptp);
    if (cptp) worst_dev = std::max(worst_dev, completeness_dev(ks));
    const double f = avg_fidelity(ks);
    fmin = std::min(fmin, f);
    fmax = std::max(fmax, f);
  }
  // determinism: identical seed -> byte-identical serialized output
  auto build = [](std::uint64_t seed) {
    io::Table t;
    t.config = {{"seed", std::to_string(seed)}, {"what", "determinism-probe"}};
    t.columns = {"alpha", "fidelity"};
    Rng r(seed);
    for (int i = 0; i < 16; ++i) {
      const double a = 0.05 + 0.9 * r.next_double();
      t.rows.push_back({io::fmt(a), io::fmt(cf::eq9_gghz_tdtc(a))});
    }
    return t;
  };
  const bool deterministic =
      io::to_json(build(99)) == io::to_json(build(99)) &&
      io::to_csv(build(99)) == io::to_csv(build(99));
  const bool ok = worst_dev < kTolStructural && fmin > 0.5 - 1e-9 &&
                  fmax < 1.0 + 1e-9 && deterministic;
  CriterionResult r{12, "structural properties (completeness, range, determinism)",
                    ok,
                    "max completeness dev=" + io::fmt(worst_dev, 4) +
                        ", fidelity range=[" + io::fmt(fmin, 6) + "," +
                        io::fmt(fmax, 6) + "], deterministic=" +
                        (deterministic ? "yes" : "NO")};
  return r;
}

inline std::vector<CriterionResult> run_all() {
  return {criterion1(), criterion2(), criterion3(),  criterion4(),
          criterion5(), criterion6(), criterion7(),  criterion8(),
          criterion9(), criterion10(), criterion11(), criterion12()};
}

}  // namespace qr::verify
