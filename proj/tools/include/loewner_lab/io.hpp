#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "loewner/curve.hpp"

namespace loewner::lab {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Where a setting came from, lowest priority first.
enum class Source { Default, Environment, ConfigFile, Flag };
const char* to_string(Source s);

struct RunConfig {
  double tolerance = 1e-3;
  int steps_per_unit = 1024;
  std::vector<double> eps_schedule;  // empty: library default
  std::uint64_t seed = 0;
  std::filesystem::path output_dir = ".";

  Source tolerance_source = Source::Default;
  Source steps_source = Source::Default;
  Source schedule_source = Source::Default;
  Source seed_source = Source::Default;
  Source output_source = Source::Default;

  /// Throws InputError on non-positive fields or a schedule that is not decreasing in (0, 1).
  void validate() const;
  const std::vector<double>& schedule() const;
  Json to_json() const;
};

/// Overlays the keys present in a JSON config file.
void apply_config_file(RunConfig& config, const std::filesystem::path& path, Source source);

enum class CurveKind { Arc, Loop, Chord, Tangential };
const char* to_string(CurveKind k);
CurveKind curve_kind_from_string(const std::string& s);

struct CurveFile {
  CurveKind kind = CurveKind::Arc;
  std::vector<Complex> points;
  std::optional<double> beta;

  CurveSamples samples() const;
  Json to_json() const;
  static CurveFile from_json(const Json& j);
};

Json driving_to_json(const DrivingFunction& W);
DrivingFunction driving_from_json(const Json& j);

/// Exact file contents; throws InputError when unreadable.
std::string read_text(const std::filesystem::path& path);
Json parse_json(const std::string& text, const std::string& what);

CurveFile read_curve(const std::filesystem::path& path);
/// JSON driving file, or CSV with a header and columns t,W.
DrivingFunction read_driving(const std::filesystem::path& path);

/// Git blob id: SHA-1 of "blob <size>\0" followed by the bytes.
std::string git_blob_hash(const std::string& bytes);

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);
/// A finite number, or the string "inf" / "-inf" / "nan".
Json number_or_string(double x);
double number_from_json(const Json& j);

/// RFC 4180 CSV with '.' decimals and round-trip precision.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<double>& values);
  std::string str() const { return out_; }

 private:
  std::size_t columns_;
  std::string out_;
};

void write_text(const std::filesystem::path& path, const std::string& text);
/// Two-space indented JSON followed by a newline.
void write_json(const std::filesystem::path& path, const Json& j);

}  // namespace loewner::lab
