// Copyright 2026 The pssynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pssynth/errors.hpp"
#include "pssynth/runner.hpp"

namespace pssynth {
namespace {

namespace fs = std::filesystem;

std::string fmt_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string fmt_fixed(double v, int digits) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, digits);
  return std::string(buf.data(), ptr);
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string circuit_file_name(std::size_t index) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%04zu.txt", index + 1);
  return buf.data();
}

std::string episodes_csv(const RunRecord& record) {
  std::string out = "# pssynth episodes.csv v1\nepisode,outcome,reward,gates,cumulative_distinct\n";
  for (const auto& e : record.episodes) {
    out += std::to_string(e.episode);
    out += ',';
    out += to_string(e.outcome);
    out += ',';
    out += fmt_double(e.reward);
    out += ',';
    out += std::to_string(e.gates);
    out += ',';
    out += std::to_string(e.cumulative_distinct);
    out += '\n';
  }
  return out;
}

std::string summary_csv(const RunRecord& record) {
  const auto& cfg = record.config;
  const auto& s = record.summary;
  std::ostringstream os;
  os << "# pssynth summary.csv v1\n"
     << "goal,n_qubits,episodes,seed,distinct_circuits,min_depth,successes,wall_clock_s\n"
     << cfg.goal.name() << ',' << cfg.n_qubits << ',' << cfg.episodes << ',' << cfg.seed << ','
     << s.distinct_circuits << ',' << s.min_depth << ',' << s.successes << ','
     << fmt_fixed(s.wall_clock_seconds, 3) << '\n';
  return os.str();
}

std::string circuit_index_csv(const RunRecord& record) {
  std::string out = "# pssynth circuits/index.csv v1\nepisode,depth_gates,reward,fidelity,filename\n";
  const auto& results = record.registry.results();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out += std::to_string(r.episode) + ',' + std::to_string(r.depth_gates) + ',' + fmt_double(r.reward) +
           ',' + fmt_double(r.fidelity) + ',' + circuit_file_name(i) + '\n';
  }
  return out;
}

std::string learning_curve_svg(const RunRecord& record) {
  constexpr double kWidth = 640.0;
  constexpr double kHeight = 400.0;
  constexpr double kLeft = 60.0;
  constexpr double kRight = 20.0;
  constexpr double kTop = 30.0;
  constexpr double kBottom = 50.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const std::size_t n = record.episodes.size();
  const int y_max = std::max(1, record.summary.distinct_circuits);
  const double x_span = n > 1 ? static_cast<double>(n - 1) : 1.0;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"14\">Circuits found: "
     << record.config.goal.name() << ", seed " << record.config.seed << "</text>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
     << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">episode (0 to "
     << (n > 0 ? n - 1 : 0) << ")</text>\n";
  os << "<text x=\"16\" y=\"" << kTop + plot_h / 2 << "\" transform=\"rotate(-90 16 " << kTop + plot_h / 2
     << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">distinct circuits (max "
     << record.summary.distinct_circuits << ")</text>\n";

  os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < n; ++i) {
    const double x = kLeft + plot_w * static_cast<double>(i) / x_span;
    const double y = kTop + plot_h * (1.0 - static_cast<double>(record.episodes[i].cumulative_distinct) / y_max);
    if (i > 0) os << ' ';
    os << fmt_fixed(x, 2) << ',' << fmt_fixed(y, 2);
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

std::string sweep_summary_csv(const SweepSummary& summary, const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "# pssynth sweep_summary.csv v1\n"
     << "goal,n_qubits,episodes,seed,distinct_circuits,min_depth\n";
  for (const auto& run : summary.runs) {
    os << cfg.goal.name() << ',' << cfg.n_qubits << ',' << cfg.episodes << ',' << run.seed << ','
       << run.distinct_circuits << ',' << run.min_depth << '\n';
  }
  return os.str();
}

std::vector<std::string> write_artifacts(const RunRecord& record, const fs::path& out_dir) {
  std::vector<std::string> manifest;
  auto emit = [&](const std::string& relative, const std::string& contents) {
    write_file(out_dir / relative, contents);
    manifest.push_back(relative);
  };

  try {
    std::error_code ec;
    fs::create_directories(out_dir / "circuits", ec);
    if (ec) throw IoError("cannot create " + (out_dir / "circuits").string() + ": " + ec.message());
    fs::remove(out_dir / "PARTIAL", ec);

    emit("config.echo", echo_config(record.config));
    emit("episodes.csv", episodes_csv(record));
    emit("summary.csv", summary_csv(record));
    emit("learning_curve.svg", learning_curve_svg(record));

    const auto& results = record.registry.results();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      std::string text = "# goal " + record.config.goal.name() + ", episode " + std::to_string(r.episode) +
                         ", gates " + std::to_string(r.depth_gates) + ", parallel depth " +
                         std::to_string(r.parallel_depth) + ", reward " + fmt_double(r.reward) +
                         ", fidelity " + fmt_double(r.fidelity) + "\n";
      text += format_circuit(r.circuit);
      emit("circuits/" + circuit_file_name(i), text);
    }
    emit("circuits/index.csv", circuit_index_csv(record));
    emit("ecm_snapshot.txt", record.ecm_snapshot);

    std::string listing;
    for (const auto& entry : manifest) listing += entry + '\n';
    write_file(out_dir / "MANIFEST", listing);
    manifest.push_back("MANIFEST");
  } catch (const IoError& e) {
    std::ofstream marker(out_dir / "PARTIAL");
    if (marker) marker << e.what() << '\n';
    throw;
  }
  return manifest;
}

}  // namespace pssynth
