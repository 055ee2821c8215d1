#include "qbcap/channels.hpp"

#include <cmath>
#include <stdexcept>

namespace qbcap {

std::string_view short_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::BitFlip: return "bf";
    case ChannelKind::PhaseFlip: return "pf";
    case ChannelKind::BitPhaseFlip: return "bpf";
    case ChannelKind::Depolarizing: return "dep";
    case ChannelKind::AmplitudeDamping: return "adc";
    case ChannelKind::Dephasing: return "dp";
  }
  return "?";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view name) {
  if (name == "bf") return ChannelKind::BitFlip;
  if (name == "pf") return ChannelKind::PhaseFlip;
  if (name == "bpf") return ChannelKind::BitPhaseFlip;
  if (name == "dep") return ChannelKind::Depolarizing;
  if (name == "adc") return ChannelKind::AmplitudeDamping;
  if (name == "dp") return ChannelKind::Dephasing;
  return std::nullopt;
}

std::string_view short_name(Topology t) {
  switch (t) {
    case Topology::FirstOnly: return "first";
    case Topology::ProductAllThree: return "all";
    case Topology::TriSide: return "tri";
  }
  return "?";
}

QubitChannel make_channel(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("make_channel: strength p must lie in [0,1]");
  const double keep = std::sqrt(1.0 - p);
  const double flip = std::sqrt(p);
  QubitChannel ch{kind, p, {}};
  switch (kind) {
    case ChannelKind::BitFlip:
      ch.kraus = {keep * identity2(), flip * pauli_x()};
      break;
    case ChannelKind::PhaseFlip:
      ch.kraus = {keep * identity2(), flip * pauli_z()};
      break;
    case ChannelKind::BitPhaseFlip:
      ch.kraus = {keep * identity2(), flip * pauli_y()};
      break;
    case ChannelKind::Depolarizing: {
      const double w = std::sqrt(p / 3.0);
      ch.kraus = {keep * identity2(), w * pauli_x(), w * pauli_y(), w * pauli_z()};
      break;
    }
    case ChannelKind::AmplitudeDamping:
      ch.kraus = {ComplexMatrix(2, 2, {1.0, 0.0, 0.0, keep}),
                  ComplexMatrix(2, 2, {0.0, flip, 0.0, 0.0})};
      break;
    case ChannelKind::Dephasing:
      ch.kraus = {keep * identity2(), ComplexMatrix(2, 2, {flip, 0.0, 0.0, 0.0}),
                  ComplexMatrix(2, 2, {0.0, 0.0, 0.0, flip})};
      break;
  }
  return ch;
}

double completeness_defect(const QubitChannel& ch) {
  ComplexMatrix sum(2, 2);
  for (const ComplexMatrix& e : ch.kraus) sum += dagger(e) * e;
  sum -= identity2();
  return sum.max_abs();
}

namespace {

// dst = K rho K^dagger with the 2x2 operator K acting on the qubit at bit
// position `pos` (0 = least significant), identity elsewhere. Contracts the
// left index first into `mid`, then the right index into `dst`; exactly
// diagonal K collapses to elementwise scaling.
void conjugate_one_sided(const ComplexMatrix& rho, const ComplexMatrix& k, std::size_t pos,
                         ComplexMatrix& mid, ComplexMatrix& dst) {
  const std::size_t d = rho.rows();
  const std::size_t mask = std::size_t{1} << pos;
  const Complex k00 = k(0, 0), k01 = k(0, 1), k10 = k(1, 0), k11 = k(1, 1);

  if (k01 == Complex{} && k10 == Complex{}) {
    const Complex scale[2][2] = {{k00 * std::conj(k00), k00 * std::conj(k11)},
                                 {k11 * std::conj(k00), k11 * std::conj(k11)}};
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t bi = (i >> pos) & 1u;
      for (std::size_t j = 0; j < d; ++j)
        dst(i, j) = scale[bi][(j >> pos) & 1u] * rho(i, j);
    }
    return;
  }

  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t i0 = i & ~mask, i1 = i | mask;
    const Complex ka = ((i >> pos) & 1u) ? k10 : k00;
    const Complex kb = ((i >> pos) & 1u) ? k11 : k01;
    for (std::size_t j = 0; j < d; ++j) mid(i, j) = ka * rho(i0, j) + kb * rho(i1, j);
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t j0 = j & ~mask, j1 = j | mask;
      const Complex ka = ((j >> pos) & 1u) ? std::conj(k10) : std::conj(k00);
      const Complex kb = ((j >> pos) & 1u) ? std::conj(k11) : std::conj(k01);
      dst(i, j) = mid(i, j0) * ka + mid(i, j1) * kb;
    }
  }
}

// dst = sum_m E_m rho E_m^dagger on the qubit at `pos`.
void apply_channel_one_sided(const ComplexMatrix& rho, std::span<const ComplexMatrix> kraus,
                             std::size_t pos, ComplexMatrix& mid, ComplexMatrix& term,
                             ComplexMatrix& dst) {
  for (Complex& e : dst.entries()) e = Complex{};
  for (const ComplexMatrix& k : kraus) {
    conjugate_one_sided(rho, k, pos, mid, term);
    dst += term;
  }
}

std::size_t bit_position(Subsystem side) {
  return side == Subsystem::A ? 2 : side == Subsystem::B ? 1 : 0;
}

void require_three_qubits(const DensityMatrix& rho, const char* where) {
  if (rho.dim() != 8)
    throw std::invalid_argument(std::string(where) + ": expected a three-qubit state");
}

}  // namespace

DensityMatrix apply_single_qubit(const DensityMatrix& rho, const QubitChannel& ch) {
  if (rho.dim() != 2)
    throw std::invalid_argument("apply_single_qubit: expected a one-qubit state");
  ComplexMatrix mid(2, 2), term(2, 2), out(2, 2);
  apply_channel_one_sided(rho.matrix(), ch.kraus, 0, mid, term, out);
  return DensityMatrix(std::move(out));
}

DensityMatrix apply_on_side(const DensityMatrix& rho, const QubitChannel& ch, Subsystem side) {
  require_three_qubits(rho, "apply_on_side");
  ComplexMatrix mid(8, 8), term(8, 8), out(8, 8);
  apply_channel_one_sided(rho.matrix(), ch.kraus, bit_position(side), mid, term, out);
  return DensityMatrix(std::move(out));
}

DensityMatrix apply_on_first(const DensityMatrix& rho, const QubitChannel& ch) {
  return apply_on_side(rho, ch, Subsystem::A);
}

DensityMatrix apply_product_channel(const DensityMatrix& rho, const QubitChannel& ch_a,
                                    const QubitChannel& ch_b, const QubitChannel& ch_c) {
  require_three_qubits(rho, "apply_product_channel");
  ComplexMatrix mid(8, 8), t1(8, 8), t2(8, 8), t3(8, 8), out(8, 8);
  for (const ComplexMatrix& ea : ch_a.kraus)
    for (const ComplexMatrix& eb : ch_b.kraus)
      for (const ComplexMatrix& ec : ch_c.kraus) {
        conjugate_one_sided(rho.matrix(), ec, 0, mid, t1);
        conjugate_one_sided(t1, eb, 1, mid, t2);
        conjugate_one_sided(t2, ea, 2, mid, t3);
        out += t3;
      }
  return DensityMatrix(std::move(out));
}

ScenarioEngine::ScenarioEngine(const ChannelScenario& scenario)
    : scenario_(scenario), rho_(8, 8), buf_a_(8, 8), buf_b_(8, 8), buf_c_(8, 8), buf_d_(8, 8) {
  if (scenario_.n < 1)
    throw std::invalid_argument("ChannelScenario: repetition count n must be >= 1");
  switch (scenario_.topology) {
    case Topology::FirstOnly:
      side_kraus_[0] = make_channel(scenario_.kind, scenario_.p).kraus;
      break;
    case Topology::ProductAllThree: {
      auto kraus = make_channel(scenario_.kind, scenario_.p).kraus;
      side_kraus_[0] = kraus;
      side_kraus_[1] = kraus;
      side_kraus_[2] = std::move(kraus);
      break;
    }
    case Topology::TriSide:
      side_kraus_[0] = make_channel(scenario_.kind, scenario_.p).kraus;
      side_kraus_[1] = make_channel(scenario_.kind, scenario_.q).kraus;
      side_kraus_[2] = make_channel(scenario_.kind, scenario_.gamma).kraus;
      break;
  }
  reset();
}

void ScenarioEngine::reset() {
  rho_ = initial_state(scenario_.state).matrix();
  steps_ = 0;
}

void ScenarioEngine::step() {
  switch (scenario_.topology) {
    case Topology::FirstOnly:
      apply_channel_one_sided(rho_, side_kraus_[0], 2, buf_a_, buf_b_, buf_c_);
      std::swap(rho_, buf_c_);
      break;
    case Topology::ProductAllThree: {
      // literal sum over every Kraus index combination
      for (Complex& e : buf_c_.entries()) e = Complex{};
      for (const ComplexMatrix& ea : side_kraus_[0])
        for (const ComplexMatrix& eb : side_kraus_[1])
          for (const ComplexMatrix& ec : side_kraus_[2]) {
            conjugate_one_sided(rho_, ec, 0, buf_a_, buf_b_);
            conjugate_one_sided(buf_b_, eb, 1, buf_a_, buf_d_);
            conjugate_one_sided(buf_d_, ea, 2, buf_a_, buf_b_);
            buf_c_ += buf_b_;
          }
      std::swap(rho_, buf_c_);
      break;
    }
    case Topology::TriSide:
      // three sequential one-sided applications, subsystems A, B, C
      apply_channel_one_sided(rho_, side_kraus_[0], 2, buf_a_, buf_b_, buf_c_);
      apply_channel_one_sided(buf_c_, side_kraus_[1], 1, buf_a_, buf_b_, rho_);
      apply_channel_one_sided(rho_, side_kraus_[2], 0, buf_a_, buf_b_, buf_c_);
      std::swap(rho_, buf_c_);
      break;
  }
  ++steps_;
}

DensityMatrix run_scenario(const ChannelScenario& scenario) {
  ScenarioEngine engine(scenario);
  for (int i = 0; i < scenario.n; ++i) engine.step();
  return engine.state();
}

}  // namespace qbcap
