#include "adyne/feedback.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "adyne/angles.hpp"

namespace adyne {

FeedbackScheme FeedbackScheme::const_eps(double eps) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("const_eps: eps must lie in [0, 1]");
  }
  return {SchemeKind::const_eps, eps};
}

std::string FeedbackScheme::name() const {
  switch (kind) {
    case SchemeKind::heterodyne: return "heterodyne";
    case SchemeKind::simplified: return "simplified";
    case SchemeKind::corrected_simplified: return "corrected-simplified";
    case SchemeKind::arg_a: return "arg-a";
    case SchemeKind::var_eps: return "var-eps";
    case SchemeKind::const_eps: {
      char buf[48];
      std::snprintf(buf, sizeof(buf), "const-eps:%.12g", eps);
      return buf;
    }
  }
  return "?";
}

std::optional<FeedbackScheme> FeedbackScheme::parse(std::string_view token) {
  if (token == "heterodyne") return heterodyne();
  if (token == "simplified") return simplified();
  if (token == "corrected-simplified") return corrected_simplified();
  if (token == "arg-a") return arg_a();
  if (token == "var-eps") return var_eps();
  constexpr std::string_view prefix = "const-eps:";
  if (token.substr(0, prefix.size()) == prefix) {
    try {
      const double eps = std::stod(std::string(token.substr(prefix.size())));
      if (eps >= 0.0 && eps <= 1.0) return const_eps(eps);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

namespace {

/// Phase from the delayed record, per scheme; nullopt keeps the previous one.
std::optional<double> record_estimate(const FeedbackScheme& scheme, FeedbackState& state,
                                      const DyneRecord& record) {
  double eps = 0.0;
  switch (scheme.kind) {
    case SchemeKind::arg_a:
      eps = 1.0;
      break;
    case SchemeKind::const_eps:
      eps = scheme.eps;
      break;
    case SchemeKind::var_eps: {
      if (auto e = variable_epsilon(record)) state.eps_memory = *e;
      eps = state.eps_memory;
      break;
    }
    default:
      return std::nullopt;
  }
  if (auto est = epsilon_estimate(record, eps)) return est;
  // One of a, c vanished; fall back to whichever angle remains.
  if (record.a != std::complex<double>{}) return std::arg(record.a);
  const auto c = record.c();
  if (c != std::complex<double>{}) return std::arg(c);
  return std::nullopt;
}

}  // namespace

void next_phase(const FeedbackScheme& scheme, FeedbackState& state, const FeedbackDatum* delayed,
                std::int64_t step, const FeedbackContext& ctx) {
  if (delayed == nullptr || scheme.kind == SchemeKind::heterodyne) {
    // Dead time (and heterodyne throughout): rotate by pi/2 each step.
    state.lo_phase = ctx.lo_phase_origin + static_cast<double>(step) * kHalfPi;
    return;
  }
  switch (scheme.kind) {
    case SchemeKind::simplified:
    case SchemeKind::corrected_simplified: {
      const double v = scheme.denom == DelayDenominator::current_time
                           ? static_cast<double>(step) * ctx.dv
                           : static_cast<double>(step - ctx.delay_steps + 1) * ctx.dv;
      const double shift =
          scheme.kind == SchemeKind::corrected_simplified
              ? ctx.alpha * static_cast<double>(ctx.delay_steps) * ctx.dv
              : 0.0;
      state.lo_phase += delayed->i_dv / std::sqrt(v + shift);
      break;
    }
    default: {
      if (auto est = record_estimate(scheme, state, delayed->record)) {
        state.lo_phase = *est + kHalfPi;
      }
      break;
    }
  }
}

std::optional<double> intermediate_estimate_of(const FeedbackScheme& scheme,
                                               const FeedbackState& state) {
  if (!scheme.has_intermediate_estimate()) return std::nullopt;
  return wrap_angle(state.lo_phase - kHalfPi);
}

}  // namespace adyne
