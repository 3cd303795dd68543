#include "checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace ffl::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "ffl-checkpoint v1";

json identity(const std::string& command, const RunConfig& config) {
  json id;
  id["schema"] = kSchema;
  id["command"] = command;
  id["q"] = config.q;
  id["mode"] = config.mode == Mode::exhaustive ? "exhaustive" : "sample";
  if (config.mode == Mode::sample) {
    id["samples"] = config.sample_size;
    id["seed"] = config.seed.value_or(0);
  }
  if (command == "verify") id["inject_fault"] = config.inject_fault;
  return id;
}

}  // namespace

Checkpoint::Checkpoint(std::string path, std::string command, const RunConfig& config) : path_(std::move(path)) {
  if (path_.empty()) return;
  const json id = identity(command, config);
  state_ = id;
  state_["scans"] = json::object();
  std::ifstream in(path_);
  if (!in) return;
  json stored;
  try {
    stored = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("checkpoint " + path_ + " is not valid JSON: " + e.what());
  }
  for (const auto& [key, value] : id.items())
    if (!stored.contains(key) || stored[key] != value)
      throw std::invalid_argument("checkpoint " + path_ + " was written by a different run (" + key + " differs)");
  if (!stored.contains("scans") || !stored["scans"].is_object())
    throw std::invalid_argument("checkpoint " + path_ + " has no scans");
  state_ = std::move(stored);
}

std::map<std::uint64_t, json> Checkpoint::partitions(unsigned g, unsigned prefix_digits) const {
  std::map<std::uint64_t, json> out;
  if (path_.empty()) return out;
  const std::string key = std::to_string(g);
  if (!state_["scans"].contains(key)) return out;
  const json& scan = state_["scans"][key];
  if (scan.at("prefix_digits").get<unsigned>() != prefix_digits)
    throw std::invalid_argument("checkpoint " + path_ + " partitions genus " + key + " differently");
  for (const auto& [unit, payload] : scan.at("partitions").items()) out.emplace(std::stoull(unit), payload);
  return out;
}

void Checkpoint::record(unsigned g, unsigned prefix_digits, std::uint64_t unit, json payload) {
  if (path_.empty()) return;
  json& scan = state_["scans"][std::to_string(g)];
  if (scan.is_null()) scan = json{{"prefix_digits", prefix_digits}, {"partitions", json::object()}};
  scan["partitions"][std::to_string(unit)] = std::move(payload);
  write();
}

void Checkpoint::write() const {
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << state_.dump() << "\n";
    if (!out.flush()) throw std::runtime_error("cannot write checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path_);
}

json accumulator_to_json(const MomentAccumulator& acc) {
  json j;
  j["count"] = acc.count().get_str();
  j["coefficient_sums"] = json::array();
  for (const auto& s : acc.coefficient_sums()) j["coefficient_sums"].push_back(s.get_str());
  j["square_sums"] = json::array();
  for (const auto& s : acc.square_sums()) j["square_sums"].push_back(s.get_str());
  return j;
}

MomentAccumulator accumulator_from_json(const json& j, std::uint32_t q, unsigned g) {
  auto ints = [](const json& a) {
    std::vector<BigInt> v;
    for (const auto& x : a) v.emplace_back(x.get<std::string>());
    return v;
  };
  MomentAccumulator acc(q, g);
  const auto coeffs = ints(j.at("coefficient_sums"));
  const auto squares = ints(j.at("square_sums"));
  acc.add_raw(BigInt(j.at("count").get<std::string>()), coeffs, squares);
  return acc;
}

}  // namespace ffl::cli
