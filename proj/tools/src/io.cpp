#include "loewner_lab/io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "loewner/energy.hpp"
#include "loewner/error.hpp"

namespace loewner::lab {

const char* to_string(Source s) {
  switch (s) {
    case Source::Default: return "default";
    case Source::Environment: return "environment";
    case Source::ConfigFile: return "config";
    case Source::Flag: return "flag";
  }
  return "default";
}

void RunConfig::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) throw InputError("tolerance must be positive");
  if (steps_per_unit < 2) throw InputError("steps must be at least 2");
  for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
    const double e = eps_schedule[i];
    if (!(e > 0.0 && e < 1.0)) throw InputError("eps-schedule entries must lie in (0, 1)");
    if (i > 0 && !(e < eps_schedule[i - 1])) throw InputError("eps-schedule must be decreasing");
  }
  if (!eps_schedule.empty() && eps_schedule.size() < 2) throw InputError("eps-schedule needs at least two entries");
}

const std::vector<double>& RunConfig::schedule() const {
  return eps_schedule.empty() ? kDefaultEpsSchedule : eps_schedule;
}

Json RunConfig::to_json() const {
  Json j;
  j["tolerance"] = tolerance;
  j["steps_per_unit"] = steps_per_unit;
  j["eps_schedule"] = schedule();
  j["seed"] = seed;
  j["output_dir"] = output_dir.string();
  j["provenance"] = {{"tolerance", to_string(tolerance_source)},
                     {"steps_per_unit", to_string(steps_source)},
                     {"eps_schedule", to_string(schedule_source)},
                     {"seed", to_string(seed_source)},
                     {"output_dir", to_string(output_source)}};
  return j;
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path, Source source) {
  const Json j = parse_json(read_text(path), path.string());
  if (!j.is_object()) throw InputError("config file must hold a JSON object: " + path.string());
  try {
    if (j.contains("tolerance")) {
      config.tolerance = j.at("tolerance").get<double>();
      config.tolerance_source = source;
    }
    if (j.contains("steps_per_unit")) {
      config.steps_per_unit = j.at("steps_per_unit").get<int>();
      config.steps_source = source;
    }
    if (j.contains("eps_schedule")) {
      config.eps_schedule = j.at("eps_schedule").get<std::vector<double>>();
      config.schedule_source = source;
    }
    if (j.contains("seed")) {
      config.seed = j.at("seed").get<std::uint64_t>();
      config.seed_source = source;
    }
    if (j.contains("output_dir")) {
      config.output_dir = j.at("output_dir").get<std::string>();
      config.output_source = source;
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError("bad config " + path.string() + ": " + e.what());
  }
}

const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::Arc: return "arc";
    case CurveKind::Loop: return "loop";
    case CurveKind::Chord: return "chord-in-H";
    case CurveKind::Tangential: return "tangential-to-R+";
  }
  return "arc";
}

CurveKind curve_kind_from_string(const std::string& s) {
  if (s == "arc") return CurveKind::Arc;
  if (s == "loop") return CurveKind::Loop;
  if (s == "chord-in-H") return CurveKind::Chord;
  if (s == "tangential-to-R+") return CurveKind::Tangential;
  throw InputError("unknown curve kind '" + s + "'");
}

CurveSamples CurveFile::samples() const {
  return kind == CurveKind::Loop ? CurveSamples::loop(points) : CurveSamples::arc(points);
}

Json CurveFile::to_json() const {
  Json j;
  j["format"] = "loewner-curve";
  j["version"] = kFormatVersion;
  j["kind"] = to_string(kind);
  if (beta) j["beta"] = *beta;
  Json pts = Json::array();
  for (const Complex& p : points) pts.push_back({p.real(), p.imag()});
  j["points"] = std::move(pts);
  return j;
}

CurveFile CurveFile::from_json(const Json& j) {
  try {
    if (j.at("format").get<std::string>() != "loewner-curve") throw InputError("not a curve file");
    if (j.at("version").get<int>() != kFormatVersion) throw InputError("unsupported curve file version");
    CurveFile f;
    f.kind = curve_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("beta")) f.beta = j.at("beta").get<double>();
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) throw InputError("curve points must be [x, y] pairs");
      f.points.emplace_back(p[0].get<double>(), p[1].get<double>());
    }
    f.samples();  // validates
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed curve file: ") + e.what());
  }
}

Json driving_to_json(const DrivingFunction& W) {
  Json j;
  j["format"] = "loewner-driving";
  j["version"] = kFormatVersion;
  j["t"] = W.t();
  j["w"] = W.w();
  return j;
}

DrivingFunction driving_from_json(const Json& j) {
  try {
    if (j.at("format").get<std::string>() != "loewner-driving") throw InputError("not a driving file");
    if (j.at("version").get<int>() != kFormatVersion) throw InputError("unsupported driving file version");
    return {j.at("t").get<std::vector<double>>(), j.at("w").get<std::vector<double>>()};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed driving file: ") + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("invalid JSON in " + what + ": " + e.what());
  }
}

CurveFile read_curve(const std::filesystem::path& path) {
  return CurveFile::from_json(parse_json(read_text(path), path.string()));
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InputError("not a number: '" + s + "'");
  }
  while (used < s.size() && (s[used] == ' ' || s[used] == '\r')) ++used;
  if (used != s.size()) throw InputError("not a number: '" + s + "'");
  return v;
}

}  // namespace

DrivingFunction read_driving(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  if (path.extension() != ".csv") return driving_from_json(parse_json(text, path.string()));
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty driving CSV");
  std::vector<double> t, w;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line, ',');
    if (cells.size() != 2) throw InputError("driving CSV rows must have two columns");
    t.push_back(parse_double(cells[0]));
    w.push_back(parse_double(cells[1]));
  }
  return {std::move(t), std::move(w)};
}

std::string git_blob_hash(const std::string& bytes) {
  const std::string header = "blob " + std::to_string(bytes.size()) + '\0';
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, header.data(), header.size()) != 1 ||
      EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) != 1 || EVP_DigestFinal_ex(ctx, digest, &length) != 1) {
    EVP_MD_CTX_free(ctx);
    throw Error(ErrorKind::Input, "SHA-1 computation failed");
  }
  EVP_MD_CTX_free(ctx);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return {buf, res.ptr};
}

Json number_or_string(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InputError("expected a number or \"inf\"");
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ += ',';
    out_ += header[i];
  }
  out_ += "\r\n";
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_) throw InputError("CSV row has the wrong number of columns");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ += ',';
    out_ += format_double(values[i]);
  }
  out_ += "\r\n";
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

void write_json(const std::filesystem::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

}  // namespace loewner::lab
