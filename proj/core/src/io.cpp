#include "qsdim/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qsdim/numeric.hpp"

namespace qsdim::io {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
  return j;
}

motion::MapFamily parse_family(const json& j) {
  if (!j.contains("family")) return motion::MapFamily::stretch();
  const json& fam = j.at("family");
  const std::string kind = fam.at("kind").get<std::string>();
  std::vector<double> params;
  if (fam.contains("params")) params = fam.at("params").get<std::vector<double>>();
  motion::MapFamily f;
  if (kind == "radial_stretch") {
    f.kind = motion::FamilyKind::radial_stretch;
  } else if (kind == "mobius_conjugated_stretch") {
    f.kind = motion::FamilyKind::mobius_conjugated_stretch;
  } else if (kind == "composition") {
    f.kind = motion::FamilyKind::composition;
  } else {
    throw std::invalid_argument("unknown family kind: " + kind);
  }
  f.params = std::move(params);
  f.validate();
  return f;
}

}  // namespace

PackingFile parse_packing(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.contains("disks") || !j.at("disks").is_array())
    throw std::invalid_argument("packing JSON must carry a \"disks\" array");
  std::vector<thermo::Disk> disks;
  for (const json& d : j.at("disks")) {
    disks.push_back(
        {d.at("center").get<double>(), d.at("radius").get<double>()});
  }
  return {thermo::DiskPacking(std::move(disks)), parse_family(j)};
}

PackingFile load_packing(const std::string& path) {
  return parse_packing(slurp(path));
}

spectra::SelfSimilarMeasure parse_measure(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.contains("probabilities") || !j.contains("ratios"))
    throw std::invalid_argument(
        "measure JSON must carry \"probabilities\" and \"ratios\"");
  return {j.at("probabilities").get<std::vector<double>>(),
          j.at("ratios").get<std::vector<double>>()};
}

spectra::SelfSimilarMeasure load_measure(const std::string& path) {
  return parse_measure(slurp(path));
}

void write_curve_csv(std::ostream& out, const spectra::SpectrumCurve& curve,
                     const std::string& x_name, const std::string& y_name,
                     bool conjectural) {
  if (conjectural) out << "# conjectural\n";
  out << x_name << ',' << y_name << '\n';
  for (const spectra::CurvePoint& p : curve.points)
    out << format_number(p.x) << ',' << format_number(p.y) << '\n';
}

void write_table_csv(std::ostream& out, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out << ',';
    out << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_number(row[i]);
    }
    out << '\n';
  }
}

}  // namespace qsdim::io
