#include "emotive/telemetry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "emotive/json_number.hpp"

namespace emotive {

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

double real_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw LogError(std::string("field '") + key + "' is not a number");
  return v.get<double>();
}

TickRecord decode_record(const nlohmann::json& j) {
  TickRecord r;
  r.t = real_field(j, "t");
  r.leader = {{real_field(j, "lx"), real_field(j, "ly")}, real_field(j, "lphi")};
  r.follower = {{real_field(j, "fx"), real_field(j, "fy")}, real_field(j, "fphi")};
  r.cmd = {real_field(j, "vl"), real_field(j, "vr")};
  r.state = j.at("state").get<std::string>();
  r.d_norm = real_field(j, "d");
  r.theta = real_field(j, "theta");
  r.leader_moving = j.at("moving").get<bool>();
  r.lap_visited = j.at("visited").get<int>();
  return r;
}

}  // namespace

TickRecord quantized(TickRecord r) {
  r.t = quantize4(r.t);
  r.leader = {{quantize4(r.leader.position.x), quantize4(r.leader.position.y)},
              quantize4(r.leader.heading)};
  r.follower = {{quantize4(r.follower.position.x), quantize4(r.follower.position.y)},
                quantize4(r.follower.heading)};
  r.cmd = {quantize4(r.cmd.v_left), quantize4(r.cmd.v_right)};
  r.d_norm = quantize4(r.d_norm);
  r.theta = quantize4(r.theta);
  return r;
}

std::string encode_header(const LogHeader& h) {
  nlohmann::ordered_json j;
  j["format"] = std::string(kLogFormat);
  j["config"] = config_to_json(h.config);
  j["created"] = h.created;
  return j.dump();
}

std::string encode_record(const TickRecord& r) {
  std::string s;
  s.reserve(200);
  s += "{\"t\":" + format4(r.t);
  s += ",\"lx\":" + format4(r.leader.position.x);
  s += ",\"ly\":" + format4(r.leader.position.y);
  s += ",\"lphi\":" + format4(r.leader.heading);
  s += ",\"fx\":" + format4(r.follower.position.x);
  s += ",\"fy\":" + format4(r.follower.position.y);
  s += ",\"fphi\":" + format4(r.follower.heading);
  s += ",\"vl\":" + format4(r.cmd.v_left);
  s += ",\"vr\":" + format4(r.cmd.v_right);
  s += ",\"state\":" + quote(r.state);
  s += ",\"d\":" + format4(r.d_norm);
  s += ",\"theta\":" + format4(r.theta);
  s += ",\"moving\":";
  s += r.leader_moving ? "true" : "false";
  s += ",\"visited\":" + std::to_string(r.lap_visited);
  s += "}";
  return s;
}

std::string encode_footer(const LogFooter& f) {
  if (f.lap_completed) return "{\"end\":\"lap\",\"lap_time\":" + format4(f.lap_time) + "}";
  return "{\"end\":\"timeout\"}";
}

LogWriter::LogWriter(std::ostream& out, const LogHeader& header) : out_(&out) {
  write_line(encode_header(header));
}

void LogWriter::append(const TickRecord& r) {
  if (finished_) throw LogError("append after footer");
  write_line(encode_record(r));
}

void LogWriter::finish(const LogFooter& footer) {
  if (finished_) throw LogError("footer already written");
  write_line(encode_footer(footer));
  out_->flush();
  if (!*out_) throw LogError("log write failed on flush");
  finished_ = true;
}

void LogWriter::write_line(const std::string& line) {
  *out_ << line << '\n';
  if (!*out_) throw LogError("log write failed");
}

std::string serialize_log(const TrialLog& log) {
  std::ostringstream out;
  LogWriter w(out, log.header);
  for (const auto& r : log.records) w.append(r);
  if (log.footer) w.finish(*log.footer);
  return out.str();
}

void save_log(const std::filesystem::path& file, const TrialLog& log) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw LogError("cannot open " + file.string() + " for writing");
  out << serialize_log(log);
  out.flush();
  if (!out) throw LogError("write failed: " + file.string());
}

TrialLog load_log(std::istream& in) {
  TrialLog log;
  std::string line;
  if (!std::getline(in, line) || line.empty()) throw LogError("missing log header");

  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception&) {
    throw LogError("malformed log header");
  }
  if (!header.is_object() || !header.contains("format")) throw LogError("malformed log header");
  if (header["format"] != kLogFormat) {
    throw LogError("unsupported log format " + header["format"].dump() + ", expected " +
                   std::string(kLogFormat));
  }
  try {
    log.header.config = config_from_json(header.at("config"));
    log.header.created = header.value("created", std::string("headless"));
  } catch (const std::exception& e) {
    throw LogError(std::string("bad log header: ") + e.what());
  }

  std::optional<double> last_t;
  auto truncated = [&](const std::string& why) {
    std::string msg = "truncated log (" + why + ")";
    msg += last_t ? ", last valid t=" + format4(*last_t) : ", no valid records";
    return LogError(msg, last_t);
  };

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (log.footer) throw LogError("content after footer");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw truncated("unparseable line");
    }
    if (j.contains("end")) {
      LogFooter f;
      const auto end = j["end"];
      if (end == "lap") {
        f.lap_completed = true;
        f.lap_time = j.at("lap_time").get<double>();
      } else if (end != "timeout") {
        throw LogError("unknown footer end " + end.dump());
      }
      log.footer = f;
      continue;
    }
    TickRecord r;
    try {
      r = decode_record(j);
    } catch (const std::exception&) {
      throw truncated("bad record");
    }
    if (last_t && !(r.t > *last_t)) {
      throw LogError("non-increasing t at " + format4(r.t), last_t);
    }
    last_t = r.t;
    log.records.push_back(std::move(r));
  }
  if (!log.footer) throw truncated("missing footer");
  return log;
}

TrialLog load_log(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw LogError("cannot open " + file.string());
  return load_log(in);
}

Metrics summarize(const TrialLog& log) {
  Metrics m;
  std::vector<double> d;
  std::size_t stopped = 0;
  for (const auto& r : log.records) {
    if (!r.leader_moving) continue;
    d.push_back(r.d_norm);
    if (r.cmd.is_stop()) ++stopped;
  }
  m.samples = d.size();
  if (!d.empty()) {
    // Summing in sorted order keeps the mean independent of record order.
    std::sort(d.begin(), d.end());
    double sum = 0.0;
    for (double v : d) sum += v;
    m.mean_d = sum / static_cast<double>(d.size());
    m.min_d = d.front();
    const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(d.size())));
    m.p95_d = d[std::max<std::size_t>(rank, 1) - 1];
    m.stop_fraction = static_cast<double>(stopped) / static_cast<double>(d.size());
  }

  std::int64_t pattern_ticks = 0;
  for (std::size_t i = 0; i < log.records.size(); ++i) {
    const auto& state = log.records[i].state;
    if (i > 0 && log.records[i - 1].state == "Spinning" && state != "Spinning") ++m.spin_count;
    if (state.starts_with("Pattern")) ++pattern_ticks;
  }
  if (log.header.config.behavior == BehaviorKind::kAngry && pattern_ticks > 0) {
    // Patterns are redrawn on every 5 s boundary of Pattern-mode time, even
    // when the draw repeats the current pattern, so the label alone does not
    // reveal every switch.
    const auto per_pattern = std::llround(5.0 / log.header.config.dt);
    m.pattern_switch_count = static_cast<int>((pattern_ticks - 1) / per_pattern);
  }
  if (log.footer && log.footer->lap_completed) m.lap_time_s = log.footer->lap_time;
  return m;
}

std::string metrics_to_json(const Metrics& m) {
  std::string s = "{\"samples\":" + std::to_string(m.samples);
  s += ",\"mean_d\":" + format4(m.mean_d);
  s += ",\"p95_d\":" + format4(m.p95_d);
  s += ",\"min_d\":" + format4(m.min_d);
  s += ",\"stop_fraction\":" + format4(m.stop_fraction);
  s += ",\"spin_count\":" + std::to_string(m.spin_count);
  s += ",\"pattern_switch_count\":" + std::to_string(m.pattern_switch_count);
  s += ",\"lap_time_s\":" + (m.lap_time_s ? format4(*m.lap_time_s) : std::string("null"));
  s += "}";
  return s;
}

}  // namespace emotive
