#ifndef SCATTER1D_IO_HPP
#define SCATTER1D_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "scatter1d/amplitudes.hpp"
#include "scatter1d/design.hpp"
#include "scatter1d/evolution.hpp"
#include "scatter1d/potential.hpp"

namespace scatter1d {

// Round-trip precision formatting used by every CSV/JSON emitter.
std::string format_full(double v);
nlohmann::json complex_to_json(Cx v);
Cx complex_from_json(const nlohmann::json& j);

// Potential JSON schema: {"kind": "...", ...}. Supported kinds:
//   zero
//   barrier                 height, length
//   modulated_exponential   height, k0, length
//   sampled                 x[], v_re[], v_im[]
//   index_sampled           x[], n2_re[], n2_im[]   (v = k^2 (1 - n^2))
// Complex scalars are either a number or a [re, im] pair.
Potential potential_from_json(const nlohmann::json& j);
nlohmann::json potential_to_json(const Potential& p);

// Accepts inline JSON (first non-space char '{') or a file path.
Potential potential_from_spec_string(const std::string& text);

nlohmann::json amplitudes_to_json(const ScatteringAmplitudes& amps,
                                  const SpectralFlags& flags);

struct SweepRow {
  double k = 0.0;
  std::optional<ScatteringAmplitudes> amps;  // empty: singular at this k
  double route_deviation = 0.0;
};

// Columns: k, Re T, Im T, |T|, Re R^l, Im R^l, |R^l|, Re R^r, Im R^r,
// |R^r|, route_deviation. Singular rows carry nan amplitude cells.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

struct DesignSweepRow {
  double k0L = 0.0;
  Cx transmission;
  Cx left_reflection;
};

// Columns: k0L, Re(T-1), Im(T-1), |T-1|, Re R^l, Im R^l, |R^l|.
void write_design_sweep_csv(std::ostream& os,
                            const std::vector<DesignSweepRow>& rows);

// Columns: alpha, Re/Im of the four entries, |det - 1|. Rows at the
// integrator's accepted steps, or at `samples` uniform points if > 0.
void write_trajectory_csv(std::ostream& os, const TransferTrajectory& traj,
                          int samples = 0);

// Columns: x, k0x, re_n2_minus_1, im_n2.
void write_profile_csv(std::ostream& os, const IndexProfileRecord& rec);

nlohmann::json design_to_json(const DesignResult& result,
                              const IndexProfileRecord& profile,
                              const nlohmann::json& verification);

}  // namespace scatter1d

#endif  // SCATTER1D_IO_HPP
