#pragma once

#include <iosfwd>
#include <string>

#include "affcurve/affine_map.hpp"
#include "affcurve/curve.hpp"
#include "affcurve/invariants.hpp"
#include "affcurve/reconstruction.hpp"

namespace affcurve {

// Curve CSV: header `t,x,y,z`, one sample per row, strictly increasing t.
SampledCurve read_curve_csv(std::istream& in);
SampledCurve read_curve_csv_file(const std::string& path);
void write_curve_csv(std::ostream& out, const SampledCurve& curve);
void write_curve_csv_file(const std::string& path, const SampledCurve& curve);

// Signature CSV: header `sigma,chi1,chi2`.
AffineSignature read_signature_csv(std::istream& in);
AffineSignature read_signature_csv_file(const std::string& path);
void write_signature_csv(std::ostream& out, const AffineSignature& sig);
void write_signature_csv_file(const std::string& path, const AffineSignature& sig);

// Map JSON: {"B": [9 numbers row-major], "tau": [3 numbers]}.
SpecialAffineMap map_from_json(const std::string& text);
SpecialAffineMap read_map_json_file(const std::string& path);
std::string map_to_json(const SpecialAffineMap& map);

// Report JSON: fields equivalent, distance, compared_length and, when the
// curves are equivalent, map.B / map.tau.
std::string report_to_json(const EquivalenceReport& report);

}  // namespace affcurve
