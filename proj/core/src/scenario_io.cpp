#include "specshare/scenario_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "specshare/errors.hpp"

namespace specshare {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (allowed.find(it.key()) == allowed.end()) {
      throw ConfigError("scenario: unknown key \"" + it.key() + "\" in " + where);
    }
  }
}

double get_number(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  require(v.is_number(), std::string("scenario: ") + key + " must be a number");
  return v.get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  require(v.is_number_integer(), std::string("scenario: ") + key + " must be an integer");
  return v.get<int>();
}

bool get_bool(const json& obj, const char* key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  require(v.is_boolean(), std::string("scenario: ") + key + " must be a boolean");
  return v.get<bool>();
}

// Scalar or array of numbers; scalar broadcasting happens in normalize().
std::vector<double> get_number_list(const json& obj, const char* key) {
  std::vector<double> out;
  if (!obj.contains(key)) return out;
  const json& v = obj.at(key);
  if (v.is_number()) {
    out.push_back(v.get<double>());
    return out;
  }
  require(v.is_array(), std::string("scenario: ") + key + " must be a number or an array");
  for (const json& e : v) {
    require(e.is_number(), std::string("scenario: ") + key + " entries must be numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<int> get_int_list(const json& obj, const char* key) {
  std::vector<int> out;
  if (!obj.contains(key)) return out;
  const json& v = obj.at(key);
  if (v.is_number_integer()) {
    out.push_back(v.get<int>());
    return out;
  }
  require(v.is_array(), std::string("scenario: ") + key + " must be an integer or an array");
  for (const json& e : v) {
    require(e.is_number_integer(), std::string("scenario: ") + key + " entries must be integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

Scenario load_scenario_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("scenario: invalid JSON: ") + e.what());
  }
  require(doc.is_object(), "scenario: top level must be a JSON object");
  check_keys(doc, "scenario",
             {"id", "seed", "duration_s", "warmup_fraction", "sharing_enabled",
              "n_users_nominal", "topology", "channels", "unit_price", "traffic", "sbac", "cost",
              "protocol"});

  Scenario sc;
  require(doc.contains("seed"), "scenario: seed is mandatory");
  require(doc.at("seed").is_number_unsigned() || doc.at("seed").is_number_integer(),
          "scenario: seed must be a non-negative integer");
  sc.seed = doc.at("seed").get<uint64_t>();
  if (doc.contains("id")) {
    require(doc.at("id").is_string(), "scenario: id must be a string");
    sc.id = doc.at("id").get<std::string>();
  }
  sc.duration_s = get_number(doc, "duration_s", sc.duration_s);
  sc.warmup_fraction = get_number(doc, "warmup_fraction", sc.warmup_fraction);
  sc.sharing_enabled = get_bool(doc, "sharing_enabled", sc.sharing_enabled);
  sc.n_users_nominal = get_int(doc, "n_users_nominal", sc.n_users_nominal);

  if (doc.contains("topology")) {
    const json& t = doc.at("topology");
    require(t.is_object(), "scenario: topology must be an object");
    check_keys(t, "topology",
               {"n_providers", "cells_per_provider", "cell_radius_m", "sensing_range_m"});
    sc.topology.n_providers = get_int(t, "n_providers", sc.topology.n_providers);
    sc.topology.cells_per_provider = get_int(t, "cells_per_provider",
                                             sc.topology.cells_per_provider);
    sc.topology.cell_radius_m = get_number(t, "cell_radius_m", sc.topology.cell_radius_m);
    sc.topology.sensing_range_m = get_number(t, "sensing_range_m", sc.topology.sensing_range_m);
  }

  if (doc.contains("channels")) {
    const json& c = doc.at("channels");
    require(c.is_object(), "scenario: channels must be an object");
    check_keys(c, "channels", {"per_provider", "capacity", "base_freq_hz", "spacing_hz"});
    sc.channels.per_provider = get_int_list(c, "per_provider");
    sc.channels.capacity = get_int(c, "capacity", sc.channels.capacity);
    sc.channels.base_freq_hz = get_number(c, "base_freq_hz", sc.channels.base_freq_hz);
    sc.channels.spacing_hz = get_number(c, "spacing_hz", sc.channels.spacing_hz);
  }

  sc.unit_price = get_number_list(doc, "unit_price");

  if (doc.contains("traffic")) {
    const json& t = doc.at("traffic");
    require(t.is_object(), "scenario: traffic must be an object");
    check_keys(t, "traffic",
               {"mean_rates", "rate_std", "correlation", "covariance", "mean_holding_s",
                "epoch_length_s", "rate_floor"});
    sc.traffic.mean_rates = get_number_list(t, "mean_rates");
    sc.traffic.rate_std = get_number_list(t, "rate_std");
    sc.traffic.correlation = get_number(t, "correlation", sc.traffic.correlation);
    if (t.contains("covariance")) {
      const json& m = t.at("covariance");
      require(m.is_array(), "scenario: covariance must be an array of rows");
      for (const json& row : m) {
        require(row.is_array(), "scenario: covariance rows must be arrays");
        for (const json& e : row) {
          require(e.is_number(), "scenario: covariance entries must be numbers");
          sc.traffic.covariance.push_back(e.get<double>());
        }
      }
    }
    sc.traffic.mean_holding_s = get_number(t, "mean_holding_s", sc.traffic.mean_holding_s);
    sc.traffic.epoch_length_s = get_number(t, "epoch_length_s", sc.traffic.epoch_length_s);
    sc.traffic.rate_floor = get_number(t, "rate_floor", sc.traffic.rate_floor);
  }

  if (doc.contains("sbac")) {
    const json& s = doc.at("sbac");
    require(s.is_object(), "scenario: sbac must be an object");
    check_keys(s, "sbac",
               {"beta1", "beta2", "beta3", "spread_unit_hz", "spread_floor_hz",
                "per_channel_prob", "history_window"});
    sc.sbac.beta1 = get_number(s, "beta1", sc.sbac.beta1);
    sc.sbac.beta2 = get_number(s, "beta2", sc.sbac.beta2);
    sc.sbac.beta3 = get_number(s, "beta3", sc.sbac.beta3);
    sc.sbac.spread_unit_hz = get_number(s, "spread_unit_hz", sc.sbac.spread_unit_hz);
    sc.sbac.spread_floor_hz = get_number(s, "spread_floor_hz", sc.sbac.spread_floor_hz);
    sc.per_channel_prob = get_bool(s, "per_channel_prob", sc.per_channel_prob);
    sc.history_window = get_int(s, "history_window", sc.history_window);
  }

  if (doc.contains("cost")) {
    const json& c = doc.at("cost");
    require(c.is_object(), "scenario: cost must be an object");
    check_keys(c, "cost", {"call_minutes", "price_per_second"});
    sc.cost.call_minutes = get_number(c, "call_minutes", sc.cost.call_minutes);
    sc.cost.price_per_second = get_number(c, "price_per_second", sc.cost.price_per_second);
  }

  if (doc.contains("protocol")) {
    const json& p = doc.at("protocol");
    require(p.is_object(), "scenario: protocol must be an object");
    check_keys(p, "protocol",
               {"message_latency_s", "reply_timeout_s", "sensing_period_s", "pending_timeout_s",
                "sensing_false_free", "sensing_false_busy"});
    sc.protocol.message_latency_s = get_number(p, "message_latency_s",
                                               sc.protocol.message_latency_s);
    sc.protocol.reply_timeout_s = get_number(p, "reply_timeout_s", sc.protocol.reply_timeout_s);
    sc.protocol.sensing_period_s = get_number(p, "sensing_period_s",
                                              sc.protocol.sensing_period_s);
    sc.protocol.pending_timeout_s = get_number(p, "pending_timeout_s",
                                               sc.protocol.pending_timeout_s);
    sc.protocol.sensing_false_free = get_number(p, "sensing_false_free",
                                                sc.protocol.sensing_false_free);
    sc.protocol.sensing_false_busy = get_number(p, "sensing_false_busy",
                                                sc.protocol.sensing_false_busy);
  }

  return normalize(sc);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("scenario: cannot open file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario_json(buf.str());
}

}  // namespace specshare
