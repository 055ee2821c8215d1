#include "qbcap/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace qbcap::closed_form {

namespace {

void require_ordered(const Energies& eps) {
  if (!eps.ordered())
    throw std::invalid_argument(
        "closed_form: energies must satisfy 0 <= eps_c <= eps_b <= eps_a");
}

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::invalid_argument(std::string("closed_form: ") + name + " must lie in [0,1]");
}

void require_count(int n) {
  if (n < 1) throw std::invalid_argument("closed_form: repetition count n must be >= 1");
}

// level pair sums; with ascending levels these are the positive pair gaps
double e7(const Energies& e) { return e.eps_a + e.eps_b + e.eps_c; }
double e6(const Energies& e) { return e.eps_a + e.eps_b - e.eps_c; }
double top3(const Energies& e) { return 3.0 * e.eps_a - e.eps_b - e.eps_c; }  // e6+e5+e4

// capacity of a corner-form spectrum {0 x 6, lo, hi}: only the two outermost
// level pairs carry weight
double corner_capacity(double hi, double lo, const Energies& eps) {
  return 2.0 * hi * e7(eps) + 2.0 * lo * e6(eps);
}

}  // namespace

double ghz_capacity(ChannelKind kind, double p, const Energies& eps) {
  require_ordered(eps);
  require_unit_interval(p, "p");
  switch (kind) {
    case ChannelKind::BitFlip:
      // spectrum {0 x 4, (p - p^2) x 3, 1 - 3p + 3p^2}; the top eigenvalue
      // dominates for every p, so a single branch suffices
      return 2.0 * (1.0 - 3.0 * p + 3.0 * p * p) * e7(eps) + 2.0 * (p - p * p) * top3(eps);
    case ChannelKind::Dephasing: {
      const double lo = (3.0 * p - 3.0 * p * p + p * p * p) / 2.0;
      const double hi = 1.0 - lo;
      return corner_capacity(hi, lo, eps);
    }
    case ChannelKind::PhaseFlip: {
      // corner coefficient (1-2p)^3 changes sign at p = 1/2, swapping which
      // cubic sits on the top level pair
      const double f = 1.0 - 3.0 * p + 6.0 * p * p - 4.0 * p * p * p;
      const double g = 3.0 * p - 6.0 * p * p + 4.0 * p * p * p;
      return p <= 0.5 ? corner_capacity(f, g, eps) : corner_capacity(g, f, eps);
    }
    case ChannelKind::Depolarizing: {
      // six-fold degenerate bulk level p/3 - 2p^2/9; branch swap where the
      // corner coefficient (1-4p/3)^3 changes sign at p = 3/4
      const double f = 1.0 - 10.0 * p / 3.0 + 32.0 * p * p / 9.0 - 32.0 * p * p * p / 27.0;
      const double g = 2.0 * p / 3.0 - 16.0 * p * p / 9.0 + 32.0 * p * p * p / 27.0;
      return p <= 0.75 ? 2.0 * f * e7(eps) + 2.0 * g * e6(eps)
                       : 2.0 * g * e7(eps) + 2.0 * f * e6(eps);
    }
    case ChannelKind::BitPhaseFlip: {
      // full spectrum {p^3, (p^2-p^3) x 3, (p-2p^2+p^3) x 3, 1-3p+3p^2-p^3};
      // the order reverses wholesale at p = 1/2 and both prefactors vanish
      // there, the isolated zero of this family
      const double f = 1.0 - 3.0 * p + 3.0 * p * p - 2.0 * p * p * p;
      const double g = p - 3.0 * p * p + 2.0 * p * p * p;
      const double c = 2.0 * f * e7(eps) + 2.0 * g * top3(eps);
      return p <= 0.5 ? c : -c;
    }
    case ChannelKind::AmplitudeDamping:
      return 2.0 * (1.0 - p / 2.0) * e7(eps) + p * e6(eps);
  }
  throw std::invalid_argument("ghz_capacity: unknown channel kind");
}

double ghz_capacity_n(ChannelKind kind, double p, int n, const Energies& eps) {
  require_ordered(eps);
  require_unit_interval(p, "p");
  require_count(n);
  double k = 0.0;
  switch (kind) {
    case ChannelKind::PhaseFlip:
      k = std::pow(std::abs(1.0 - 2.0 * p), 3.0 * n);
      break;
    case ChannelKind::Dephasing:
      k = std::pow(1.0 - p, 3.0 * n);
      break;
    case ChannelKind::AmplitudeDamping:
      k = std::pow(1.0 - p, static_cast<double>(n));
      break;
    default:
      throw std::invalid_argument("ghz_capacity_n: no closed form for this channel kind");
  }
  return (1.0 + k) * e7(eps) + (1.0 - k) * e6(eps);
}

double ghz_triside_pf_capacity(double p, double q, double gamma, int n, const Energies& eps) {
  require_ordered(eps);
  require_unit_interval(p, "p");
  require_unit_interval(q, "q");
  require_unit_interval(gamma, "gamma");
  require_count(n);
  const double contrast = (1.0 - 2.0 * p) * (1.0 - 2.0 * q) * (1.0 - 2.0 * gamma);
  const double k = std::pow(std::abs(contrast), static_cast<double>(n));
  return (1.0 + k) * e7(eps) + (1.0 - k) * e6(eps);
}

CornerEigenvalues ghz_like_corner_eigenvalues(double a, double c2_factor) {
  const StateSpec spec = StateSpec::ghz_like(a);
  const double c1 = spec.c1(), c2 = spec.c2(), c3 = spec.c3();
  const double c2p = c2 * c2_factor;
  const double r = std::sqrt((c1 - c3) * (c1 - c3) + 4.0 * c2p * c2p);
  return CornerEigenvalues{(c1 + c3 - r) / 2.0, (c1 + c3 + r) / 2.0};
}

AdcEigenvalues ghz_like_adc_eigenvalues(double a, double p, int n) {
  require_unit_interval(p, "p");
  require_count(n);
  const StateSpec spec = StateSpec::ghz_like(a);
  const double c1 = spec.c1(), c2 = spec.c2(), c3 = spec.c3();
  const double keep = std::pow(1.0 - p, static_cast<double>(n));
  const double diff = c1 - c3 * keep;
  const double r = std::sqrt(diff * diff + 4.0 * c2 * c2 * keep);
  return AdcEigenvalues{c3 * (1.0 - keep), (c1 + c3 * keep - r) / 2.0, (c1 + c3 * keep + r) / 2.0};
}

double ghz_like_capacity(ChannelKind kind, double a, double p, int n, const Energies& eps) {
  require_ordered(eps);
  require_unit_interval(p, "p");
  require_count(n);
  switch (kind) {
    case ChannelKind::PhaseFlip:
    case ChannelKind::Dephasing: {
      const double base = kind == ChannelKind::PhaseFlip ? 1.0 - 2.0 * p : 1.0 - p;
      const double factor = std::pow(std::abs(base), 3.0 * n);
      const CornerEigenvalues ev = ghz_like_corner_eigenvalues(a, factor);
      return corner_capacity(ev.lambda7, ev.lambda6, eps);
    }
    case ChannelKind::AmplitudeDamping: {
      const AdcEigenvalues ev = ghz_like_adc_eigenvalues(a, p, n);
      // lambda6 vanishes identically for a pure corner state; the pairing
      // follows whichever of lambda5, lambda7 is on top
      return ev.lambda5 <= ev.lambda7 ? corner_capacity(ev.lambda7, ev.lambda5, eps)
                                      : corner_capacity(ev.lambda5, ev.lambda7, eps);
    }
    default:
      throw std::invalid_argument("ghz_like_capacity: no closed form for this channel kind");
  }
}

double ghz_like_triside_pf_capacity(double a, double p, double q, double gamma, int n,
                                    const Energies& eps) {
  require_ordered(eps);
  require_unit_interval(p, "p");
  require_unit_interval(q, "q");
  require_unit_interval(gamma, "gamma");
  require_count(n);
  const double contrast = (1.0 - 2.0 * p) * (1.0 - 2.0 * q) * (1.0 - 2.0 * gamma);
  const CornerEigenvalues ev =
      ghz_like_corner_eigenvalues(a, std::pow(std::abs(contrast), static_cast<double>(n)));
  return corner_capacity(ev.lambda7, ev.lambda6, eps);
}

std::optional<double> capacity(const ChannelScenario& s, const Energies& eps) {
  if (!eps.ordered()) return std::nullopt;
  const bool ghz = s.state.kind() == StateKind::Ghz;
  switch (s.topology) {
    case Topology::ProductAllThree:
      if (ghz) {
        if (s.n == 1 && s.kind != ChannelKind::AmplitudeDamping)
          return ghz_capacity(s.kind, s.p, eps);
        if (s.kind == ChannelKind::PhaseFlip || s.kind == ChannelKind::Dephasing)
          return ghz_capacity_n(s.kind, s.p, s.n, eps);
        return std::nullopt;
      }
      if (s.kind == ChannelKind::PhaseFlip || s.kind == ChannelKind::Dephasing)
        return ghz_like_capacity(s.kind, s.state.a(), s.p, s.n, eps);
      return std::nullopt;
    case Topology::FirstOnly:
      if (s.kind != ChannelKind::AmplitudeDamping) return std::nullopt;
      if (ghz) return ghz_capacity_n(s.kind, s.p, s.n, eps);
      return ghz_like_capacity(s.kind, s.state.a(), s.p, s.n, eps);
    case Topology::TriSide:
      if (s.kind != ChannelKind::PhaseFlip) return std::nullopt;
      if (ghz) return ghz_triside_pf_capacity(s.p, s.q, s.gamma, s.n, eps);
      return ghz_like_triside_pf_capacity(s.state.a(), s.p, s.q, s.gamma, s.n, eps);
  }
  return std::nullopt;
}

}  // namespace qbcap::closed_form
