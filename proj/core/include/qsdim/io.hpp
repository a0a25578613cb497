#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qsdim/motion.hpp"
#include "qsdim/spectra.hpp"
#include "qsdim/thermo.hpp"

// File formats:
//   packing:  {"disks":[{"center":c,"radius":r},...],
//              "family":{"kind":"radial_stretch","params":[]}}   (family optional)
//   measure:  {"probabilities":[...],"ratios":[...]}
// Curves and tables go out as CSV with a single header row; numbers are
// rendered with at most 12 significant digits, infinities as "inf"/"-inf".

namespace qsdim::io {

struct PackingFile {
  thermo::DiskPacking packing;
  motion::MapFamily family;
};

PackingFile load_packing(const std::string& path);
PackingFile parse_packing(const std::string& json_text);

spectra::SelfSimilarMeasure load_measure(const std::string& path);
spectra::SelfSimilarMeasure parse_measure(const std::string& json_text);

void write_curve_csv(std::ostream& out, const spectra::SpectrumCurve& curve,
                     const std::string& x_name, const std::string& y_name,
                     bool conjectural = false);

void write_table_csv(std::ostream& out, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

}  // namespace qsdim::io
