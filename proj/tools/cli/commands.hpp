#pragma once

#include <string>

#include "cli.hpp"
#include "table.hpp"

namespace dkg::cli {

Table osc_spectrum(const RunConfig& rc);
Table osc_profile(const RunConfig& rc);
Table coulomb_spectrum(const RunConfig& rc);
Table coulomb_sweep(const RunConfig& rc);
Table pair_creation(const RunConfig& rc);
Table critical_charge_table(const RunConfig& rc);

/// Oracle-vs-analytic checks plus the closed-form identities.
Table verify_suite();

/// (series, x, y, extras...) for F1..F8. Throws UnknownFigure.
Table figure_data(const std::string& id);

/// n uniform points on [a, b], endpoints included.
std::vector<double> linspace(double a, double b, int n);

}  // namespace dkg::cli
