#pragma once

#include <string>
#include <vector>

#include "lfmkit/field_flow.hpp"
#include "lfmkit/functional.hpp"
#include "lfmkit/quadrature.hpp"
#include "lfmkit/types.hpp"

namespace lfmkit {

// Each overload returns the list of violated invariants (empty iff valid).
// Sampled checks (flows, decay bounds, jacobians) draw from a fixed seed so
// validation is deterministic.

std::vector<std::string> validate(const TimeGrid& grid);
std::vector<std::string> validate(const DiscretePath& path);
std::vector<std::string> validate(const PhasePath& path);
std::vector<std::string> validate(const FiniteSubspace& subspace);
std::vector<std::string> validate(const CylinderFunctional& psi);
std::vector<std::string> validate(const VectorFieldSpec& field, int dim);
std::vector<std::string> validate(const FlowSpec& flow, int dim, double t_max = 1.0);
std::vector<std::string> validate(const QuadratureSpec& quad, int dim);
std::vector<std::string> validate(const WaveFunction& wave);

}  // namespace lfmkit
