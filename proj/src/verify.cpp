#include "qbcap/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qbcap/capacity.hpp"
#include "qbcap/channels.hpp"
#include "qbcap/closed_forms.hpp"
#include "qbcap/parallel.hpp"
#include "qbcap/sweep.hpp"

namespace qbcap {

namespace {

std::string family_label(const ChannelScenario& proto) {
  std::ostringstream os;
  if (proto.state.kind() == StateKind::Ghz) {
    os << "ghz";
  } else {
    const double a = proto.state.a();
    os << "ghzlike(a2=" << a * a << ")";
  }
  os << "/" << short_name(proto.kind) << "/" << short_name(proto.topology);
  if (proto.topology == Topology::TriSide) os << "(gamma=" << proto.gamma << ")";
  return os.str();
}

// Walks one trajectory per grid point, comparing the numeric capacity with
// the closed form at every checkpoint. `set_point` maps a flat grid index to
// the scenario's strengths.
void run_family(const ChannelScenario& proto, const std::vector<int>& checkpoints,
                std::size_t point_count,
                const std::function<void(ChannelScenario&, std::size_t)>& set_point,
                const Energies& eps, const Hamiltonian& h, unsigned threads,
                std::vector<FamilyResult>& out) {
  std::vector<std::vector<double>> errs(checkpoints.size(),
                                        std::vector<double>(point_count, 0.0));
  parallel_for(
      point_count,
      [&](std::size_t idx) {
        ChannelScenario s = proto;
        set_point(s, idx);
        ScenarioEngine engine(s);
        std::size_t ci = 0;
        const int last = checkpoints.back();
        for (int step = 1; step <= last && ci < checkpoints.size(); ++step) {
          engine.step();
          if (step != checkpoints[ci]) continue;
          const double numeric = battery_capacity(engine.state(), h).capacity;
          s.n = step;
          const auto reference = closed_form::capacity(s, eps);
          if (!reference)
            throw std::logic_error("run_verification: family lacks a closed form");
          errs[ci][idx] = std::abs(numeric - *reference);
          ++ci;
        }
      },
      threads);
  for (std::size_t ci = 0; ci < checkpoints.size(); ++ci) {
    const double worst = *std::max_element(errs[ci].begin(), errs[ci].end());
    out.push_back(FamilyResult{family_label(proto), checkpoints[ci], worst, point_count});
  }
}

}  // namespace

double VerificationReport::max_abs_err() const {
  double worst = 0.0;
  for (const FamilyResult& r : results) worst = std::max(worst, r.max_abs_err);
  return worst;
}

bool VerificationReport::pass(double tol) const { return max_abs_err() <= tol; }

VerificationReport run_verification(const Energies& eps, const VerifyOptions& options) {
  if (options.checkpoints.empty() ||
      !std::is_sorted(options.checkpoints.begin(), options.checkpoints.end()) ||
      options.checkpoints.front() < 1)
    throw std::invalid_argument("run_verification: checkpoints must be ascending and >= 1");
  if (!eps.ordered())
    throw std::invalid_argument("run_verification: energies must satisfy the level ordering");

  const TripartiteHamiltonian h = tripartite_hamiltonian(eps);
  const GridSpec grid_1d{0.0, 1.0, options.grid_1d};
  const GridSpec grid_2d{0.0, 1.0, options.grid_2d};
  const std::vector<int> once{1};

  VerificationReport report;
  auto sweep_p = [&](ChannelScenario& s, std::size_t idx) {
    s.p = grid_1d.value(static_cast<int>(idx));
  };
  auto sweep_pq = [&](ChannelScenario& s, std::size_t idx) {
    s.p = grid_2d.value(static_cast<int>(idx) / options.grid_2d);
    s.q = grid_2d.value(static_cast<int>(idx) % options.grid_2d);
  };
  auto run_1d = [&](const ChannelScenario& proto, const std::vector<int>& ns) {
    run_family(proto, ns, static_cast<std::size_t>(options.grid_1d), sweep_p, eps, h.op,
               options.threads, report.results);
  };
  auto run_2d = [&](const ChannelScenario& proto, const std::vector<int>& ns) {
    run_family(proto, ns, static_cast<std::size_t>(options.grid_2d) * options.grid_2d,
               sweep_pq, eps, h.op, options.threads, report.results);
  };

  const StateSpec ghz = StateSpec::ghz();

  // one-pass product families
  for (ChannelKind kind : {ChannelKind::BitFlip, ChannelKind::BitPhaseFlip,
                           ChannelKind::Depolarizing})
    run_1d(ChannelScenario{ghz, Topology::ProductAllThree, kind}, once);

  // repeated product and first-subsystem families
  run_1d(ChannelScenario{ghz, Topology::ProductAllThree, ChannelKind::PhaseFlip},
         options.checkpoints);
  run_1d(ChannelScenario{ghz, Topology::ProductAllThree, ChannelKind::Dephasing},
         options.checkpoints);
  run_1d(ChannelScenario{ghz, Topology::FirstOnly, ChannelKind::AmplitudeDamping},
         options.checkpoints);
  for (double a : options.amplitudes) {
    const StateSpec like = StateSpec::ghz_like(a);
    run_1d(ChannelScenario{like, Topology::ProductAllThree, ChannelKind::PhaseFlip},
           options.checkpoints);
    run_1d(ChannelScenario{like, Topology::ProductAllThree, ChannelKind::Dephasing},
           options.checkpoints);
    run_1d(ChannelScenario{like, Topology::FirstOnly, ChannelKind::AmplitudeDamping},
           options.checkpoints);
  }

  // tri-side phase flip surfaces
  for (double gamma : options.gammas) {
    ChannelScenario proto{ghz, Topology::TriSide, ChannelKind::PhaseFlip};
    proto.gamma = gamma;
    run_2d(proto, options.checkpoints);
    proto.state = StateSpec::ghz_like(options.amplitudes.front());
    run_2d(proto, options.checkpoints);
  }

  return report;
}

}  // namespace qbcap
