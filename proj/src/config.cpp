#include "stsmc/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace stsmc {

namespace {

using nlohmann::json;

Partition parse_partition(const json& j) {
  return make_uniform_partition(j.at("labels").get<std::vector<std::string>>(),
                                j.at("lo").get<double>(), j.at("hi").get<double>());
}

FisConfig parse_fis(const json& j) {
  FisConfig fis;
  fis.in1 = parse_partition(j.at("input1"));
  fis.in2 = parse_partition(j.at("input2"));
  fis.out = parse_partition(j.at("output"));
  if (j.contains("output_gain")) fis.output_gain = j.at("output_gain").get<double>();

  fis.rules.row_labels.reserve(fis.in1.size());
  for (const TriangularSet& s : fis.in1.sets) fis.rules.row_labels.push_back(s.label);
  fis.rules.col_labels.reserve(fis.in2.size());
  for (const TriangularSet& s : fis.in2.sets) fis.rules.col_labels.push_back(s.label);

  const json& rows = j.at("rules");
  if (!rows.is_array() || rows.size() != fis.in1.size())
    throw std::runtime_error("fis rules must have one row per input1 set");
  for (const json& row : rows) {
    if (!row.is_array() || row.size() != fis.in2.size())
      throw std::runtime_error("fis rule row must have one entry per input2 set");
    for (const json& cell : row) fis.rules.entries.push_back(cell.get<std::string>());
  }
  return fis;
}

DisturbanceSchedule parse_events(const json& j) {
  DisturbanceSchedule sched;
  for (const json& ev : j) {
    DisturbanceEvent e;
    e.t = ev.at("t").get<double>();
    if (ev.contains("vin")) e.vin = ev.at("vin").get<double>();
    if (ev.contains("R")) e.R = ev.at("R").get<double>();
    sched.events.push_back(e);
  }
  return sched;
}

HarnessConfig parse_root(const json& j) {
  HarnessConfig cfg;

  const json& plant = j.at("plant");
  cfg.plant.vin_nominal = plant.at("vin").get<double>();
  cfg.plant.inductance = plant.at("inductance").get<double>();
  cfg.plant.capacitance = plant.at("capacitance").get<double>();
  cfg.plant.load_nominal = plant.at("load").get<double>();
  validate(cfg.plant);

  cfg.vref = j.at("vref").get<double>();

  const json& sim = j.at("sim");
  cfg.dt = sim.at("dt").get<double>();
  cfg.duration = sim.at("duration").get<double>();
  cfg.edot_filter_tau = sim.at("edot_filter_tau").get<double>();

  if (j.contains("metrics")) {
    const json& m = j.at("metrics");
    if (m.contains("band_frac")) cfg.metrics.band_frac = m.at("band_frac").get<double>();
    if (m.contains("tail_frac")) cfg.metrics.tail_frac = m.at("tail_frac").get<double>();
    if (m.contains("chatter_window"))
      cfg.metrics.chatter_window = m.at("chatter_window").get<double>();
  }

  const json& st = j.at("supertwisting");
  cfg.st.K1 = st.at("K1").get<double>();
  cfg.st.K2 = st.at("K2").get<double>();
  cfg.st.c = st.at("c").get<double>();
  cfg.st.direction = st.at("direction").get<double>();
  cfg.st.u_min = st.at("u_min").get<double>();
  cfg.st.u_max = st.at("u_max").get<double>();
  cfg.st.d0 = st.at("d0").get<double>();

  const json& ad = j.at("adaptation");
  cfg.adaptation.e_norm_scale = ad.at("e_norm_scale").get<double>();
  cfg.adaptation.kc_min = ad.at("kc_min").get<double>();
  cfg.adaptation.kc_max = ad.at("kc_max").get<double>();
  cfg.adaptation.fis = parse_fis(ad.at("fis"));
  validate(cfg.adaptation);

  const json& fo = j.at("fosmflc");
  cfg.fosm.c = fo.at("c").get<double>();
  cfg.fosm.s_scale = fo.at("s_scale").get<double>();
  cfg.fosm.output_gain = fo.at("output_gain").get<double>();
  cfg.fosm.u_min = fo.at("u_min").get<double>();
  cfg.fosm.u_max = fo.at("u_max").get<double>();
  cfg.fosm.d0 = fo.at("d0").get<double>();
  cfg.fosm.in = make_seven_set_partition();
  cfg.fosm.out = make_seven_set_partition();
  validate(cfg.fosm);

  const json& cl = j.at("classical_smc");
  cfg.classical.c = cl.at("c").get<double>();
  cfg.classical.gain = cl.at("gain").get<double>();
  cfg.classical.u_min = cl.at("u_min").get<double>();
  cfg.classical.u_max = cl.at("u_max").get<double>();
  cfg.classical.d0 = cl.at("d0").get<double>();

  const json& scen = j.at("scenarios");
  if (!scen.is_array() || scen.empty())
    throw std::runtime_error("config must list at least one scenario");
  for (const json& s : scen) {
    ScenarioEntry entry;
    entry.name = s.at("name").get<std::string>();
    if (entry.name.empty()) throw std::runtime_error("scenario name must not be empty");
    if (s.contains("events")) entry.disturbances = parse_events(s.at("events"));
    validate(entry.disturbances);
    for (const ScenarioEntry& prior : cfg.scenarios)
      if (prior.name == entry.name)
        throw std::runtime_error("duplicate scenario name '" + entry.name + "'");
    cfg.scenarios.push_back(std::move(entry));
  }

  return cfg;
}

}  // namespace

HarnessConfig parse_config(const std::string& text, const std::string& origin) {
  try {
    return parse_root(json::parse(text));
  } catch (const json::exception& e) {
    throw std::runtime_error("bad config " + origin + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error("bad config " + origin + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error("bad config " + origin + ": " + e.what());
  }
}

HarnessConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), "'" + path + "'");
}

std::vector<std::string> scenario_names(const HarnessConfig& cfg) {
  std::vector<std::string> names;
  names.reserve(cfg.scenarios.size());
  for (const ScenarioEntry& s : cfg.scenarios) names.push_back(s.name);
  return names;
}

const ScenarioEntry& find_scenario(const HarnessConfig& cfg, const std::string& name) {
  for (const ScenarioEntry& s : cfg.scenarios)
    if (s.name == name) return s;
  throw std::invalid_argument("unknown scenario '" + name + "'");
}

ScenarioConfig make_scenario(const HarnessConfig& cfg, const std::string& name,
                             ControllerKind controller) {
  const ScenarioEntry& entry = find_scenario(cfg, name);

  ScenarioConfig sc;
  sc.name = entry.name;
  sc.controller = controller;
  sc.vref = cfg.vref;
  sc.duration = cfg.duration;
  sc.dt = cfg.dt;
  sc.plant = cfg.plant;
  sc.disturbances = entry.disturbances;
  sc.st = cfg.st;
  sc.adaptation = cfg.adaptation;
  sc.fosm = cfg.fosm;
  sc.classical = cfg.classical;
  sc.edot_filter_tau = cfg.edot_filter_tau;
  for (const DisturbanceEvent& ev : entry.disturbances.events) {
    if (ev.t > 0.0) {
      sc.event_time = ev.t;
      break;
    }
  }
  validate(sc);
  return sc;
}

}  // namespace stsmc
