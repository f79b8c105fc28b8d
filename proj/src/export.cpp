#include "zeckvec/export.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "zeckvec/error.hpp"

namespace zeckvec {

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorKind::InvalidArgument, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::InvalidArgument, "cannot move output into place at " + path.string());
  }
}

std::string region_csv(const RegionSet& region, std::size_t dimension) {
  std::string out;
  for (std::size_t i = 1; i <= dimension; ++i) out += "x" + std::to_string(i) + ",";
  out += "n_first,sr_string\n";
  for (const auto& m : region.members) {
    out += m.point.to_csv();
    out += "," + std::to_string(m.n_first) + ",\"" + m.sr.to_string() + "\"\n";
  }
  return out;
}

namespace {

// Integers that fit in 64 bits stay numbers; larger ones become strings.
nlohmann::ordered_json json_integer(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() && value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
};

}  // namespace

std::string region_svg(const RegionSet& region, std::size_t dimension) {
  if (dimension != 2) {
    throw Error(ErrorKind::InvalidArgument, "SVG output needs k = 3 (planar regions)");
  }
  std::int64_t min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& m : region.members) {
    const auto x = to_int64(m.point[0]);
    const auto y = to_int64(m.point[1]);
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  const long long span = std::max<long long>({max_x - min_x, max_y - min_y, 1});
  const long long cell = std::clamp(800LL / span, 2LL, 24LL);
  const long long margin = 2 * cell;
  const long long width = (max_x - min_x) * cell + 2 * margin;
  const long long height = (max_y - min_y) * cell + 2 * margin;
  const long long legend = 16 * static_cast<long long>(region.n + 1) + 8;
  auto px = [&](long long x) { return margin + (x - min_x) * cell; };
  auto py = [&](long long y) { return margin + (max_y - y) * cell; };
  const long long radius = std::max(1LL, cell / 3);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width + 120) + "\" height=\"" +
         std::to_string(std::max(height, legend)) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& m : region.members) {
    const auto x = to_int64(m.point[0]);
    const auto y = to_int64(m.point[1]);
    if (x == 0 && y == 0) continue;
    out += "<circle cx=\"" + std::to_string(px(x)) + "\" cy=\"" + std::to_string(py(y)) + "\" r=\"" +
           std::to_string(radius) + "\" fill=\"" + kPalette[m.n_first % kPalette.size()] + "\"/>\n";
  }
  const long long half = std::max(2LL, cell / 2);
  out += "<rect x=\"" + std::to_string(px(0) - half) + "\" y=\"" + std::to_string(py(0) - half) + "\" width=\"" +
         std::to_string(2 * half) + "\" height=\"" + std::to_string(2 * half) + "\" fill=\"black\"/>\n";
  for (std::size_t i = 1; i <= region.n; ++i) {
    const auto y = 16 * static_cast<long long>(i);
    out += "<circle cx=\"" + std::to_string(width + 16) + "\" cy=\"" + std::to_string(y) + "\" r=\"5\" fill=\"" +
           kPalette[i % kPalette.size()] + "\"/>";
    out += "<text x=\"" + std::to_string(width + 28) + "\" y=\"" + std::to_string(y + 4) +
           "\" font-size=\"12\">R" + std::to_string(i) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string stats_json(const RecurrenceVector& c, std::span<const SummandStats> stats) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  nlohmann::ordered_json coefficients = nlohmann::ordered_json::array();
  for (const auto& ci : c.coefficients()) coefficients.push_back(json_integer(ci));
  for (const auto& s : stats) {
    nlohmann::ordered_json entry;
    entry["c"] = coefficients;
    entry["n"] = s.n;
    entry["mode"] = std::string(to_string(s.mode));
    if (s.mode == StatsMode::Sampled) {
      entry["seed"] = s.seed;
    } else {
      entry["seed"] = nullptr;
    }
    entry["mean"] = s.mean;
    entry["variance"] = s.variance;
    entry["skewness"] = s.skewness;
    entry["excess_kurtosis"] = s.excess_kurtosis;
    nlohmann::ordered_json histogram = nlohmann::ordered_json::object();
    for (const auto& [count, freq] : s.histogram) histogram[std::to_string(count)] = freq;
    entry["histogram"] = std::move(histogram);
    doc.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

std::string stats_series_csv(std::span<const SummandStats> stats) {
  std::string out = "n,mean,variance\n";
  for (const auto& s : stats) {
    nlohmann::json row = {s.mean, s.variance};
    out += std::to_string(s.n) + "," + row[0].dump() + "," + row[1].dump() + "\n";
  }
  return out;
}

std::string trace_jsonl(std::span<const TraceRecord> records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json line;
    line["op"] = std::string(to_string(r.op));
    line["pos"] = r.position;
    line["count"] = json_integer(r.count);
    line["string"] = r.result.to_string();
    line["G"] = json_integer(r.g);
    out += line.dump() + "\n";
  }
  return out;
}

}  // namespace zeckvec
