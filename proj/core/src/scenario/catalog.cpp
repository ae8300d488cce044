#include "dcsim/scenario/catalog.hpp"

#include <filesystem>

#include "dcsim/scenario/parse.hpp"

namespace dcsim {

namespace {

// Startup-to-steady-state runs at the 8000 A operating point. The DC-link
// series inductance is kept small so the link carries the rectifier's
// six-pulse ripple at the magnitude the full-scale supply exhibits under
// heavy load; the output stage and control parameters keep their plate
// values. The three variants differ only in the controller stack.
const char* kFig11Common = R"(
[grid]
u_ll_rms = 380
f_grid = 50
pulses = 6

[plant]
n = 0.6667
L_lk = 30e-6
L1 = 3e-6
C1 = 3000e-6
L2 = 3000e-6
C2 = 3500e-6
R_d = 0.03
R_s = 0.01
f_s = 15000
R_load = 0.032

[topology]
modules_per_group = 3
groups = 4
mismatch_pct = 1.0
seed = 7

[reference]
value = 8000

[clock]
dt_plant = 2e-6
t_end = 1.0

[outputs]
rate = 10000
ripple_window = 0.2
)";

std::string fig11(const std::string& name, const std::string& description,
                  const std::string& controller) {
  return "[meta]\nname = " + name + "\ndescription = " + description + "\n" + kFig11Common +
         controller;
}

// No-load to heavy-load step at 7 V. The output stage (L2, C2, R_d) is sized
// so a saturated-duty current ramp can hold the bus through the step and the
// light-load resonance stays damped; grid-side and control parameters keep
// their plate values.
const char* kLoadStepCommon = R"(
[grid]
u_ll_rms = 380
f_grid = 50
pulses = 6

[plant]
n = 0.6667
L_lk = 30e-6
L1 = 3200e-6
C1 = 3000e-6
L2 = 200e-6
C2 = 60e-3
R_d = 0.02
R_s = 0.01
f_s = 15000
R_load = 10000

[topology]
modules_per_group = 3
groups = 4
mismatch_pct = 1.0
seed = 7

[reference]
value = 7

[load]
events = 1.0:0.0035

[clock]
dt_plant = 2e-6
t_end = 3.0

[outputs]
rate = 10000
ripple_window = 0.2
recovery_band = 0.05
)";

std::string loadstep(const std::string& name, const std::string& description,
                     const std::string& controller) {
  return "[meta]\nname = " + name + "\ndescription = " + description + "\n" + kLoadStepCommon +
         controller;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;

  cat.push_back({"fig11_pi", "8000 A startup, PI current control",
                 fig11("fig11_pi", "8000 A startup, PI current control",
                       "\n[controller]\nkind = pi\nmode = current\n")});

  cat.push_back({"fig11_ladrc", "8000 A startup, fixed-bandwidth LADRC current control",
                 fig11("fig11_ladrc", "8000 A startup, fixed-bandwidth LADRC current control",
                       "\n[controller]\nkind = ladrc\nmode = current\nwc0 = 400\nw0 = 2800\n"
                       "b0 = 1.1e8\n")});

  cat.push_back(
      {"fig11_aladrc",
       "8000 A startup, adaptive LADRC with duty compensation and staggered delays",
       fig11("fig11_aladrc",
             "8000 A startup, adaptive LADRC with duty compensation and staggered delays",
             "\n[controller]\nkind = aladrc\nmode = current\nwc0 = 400\nw0 = 2800\nb0 = 2e7\n"
             "k_s = 100\ni_c = 30\nhysteresis = 2\n\n[compensation]\nenabled = on\nk_w = 0.01\n"
             "limit = 0.05\n\n[hdcsc]\nenabled = on\n")});

  cat.push_back({"fig12_sweep", "base scenario for the output-capacitor sweep",
                 fig11("fig12_sweep", "base scenario for the output-capacitor sweep",
                       "\n[controller]\nkind = aladrc\nmode = current\nwc0 = 400\nw0 = 2800\n"
                       "b0 = 2e7\nk_s = 100\ni_c = 30\nhysteresis = 2\n\n[compensation]\n"
                       "enabled = on\nk_w = 0.01\nlimit = 0.05\n\n[hdcsc]\nenabled = on\n")});

  cat.push_back({"fig15_pi_loadstep", "7 V supply, 10 kOhm to 3.5 mOhm load step, PI control",
                 loadstep("fig15_pi_loadstep",
                          "7 V supply, 10 kOhm to 3.5 mOhm load step, PI control",
                          "\n[controller]\nkind = pi\nmode = voltage\n")});

  cat.push_back(
      {"fig16_aladrc_loadstep", "7 V supply, 10 kOhm to 3.5 mOhm load step, adaptive LADRC",
       loadstep("fig16_aladrc_loadstep",
                "7 V supply, 10 kOhm to 3.5 mOhm load step, adaptive LADRC",
                "\n[controller]\nkind = aladrc\nmode = voltage\nwc0 = 400\nw0 = 2800\nb0 = auto\n"
                "k_s = 100\ni_c = 30\nhysteresis = 2\n")});

  cat.push_back(
      {"fig17_full",
       "7 V load step with the full stack: adaptive LADRC, compensation, staggered delays",
       loadstep("fig17_full",
                "7 V load step with the full stack: adaptive LADRC, compensation, staggered delays",
                "\n[controller]\nkind = aladrc\nmode = voltage\nwc0 = 400\nw0 = 2800\nb0 = auto\n"
                "k_s = 100\ni_c = 30\nhysteresis = 2\n\n[compensation]\nenabled = on\n"
                "k_w = 0.01\nlimit = 0.05\n\n[hdcsc]\nenabled = on\n")});

  cat.push_back(
      {"hdcsc_demo",
       "staggered vs coherent duty compensation on the 8000 A operating point",
       fig11("hdcsc_demo",
             "staggered vs coherent duty compensation on the 8000 A operating point",
             "\n[controller]\nkind = pi\nmode = current\nkp = 0.001\nki = 0.05\n\n"
             "[compensation]\nenabled = on\nk_w = 2.5\nlimit = 0.05\n\n[hdcsc]\n"
             "enabled = on\n")});

  cat.push_back({"prop_zero_duty", "synthetic: all duties forced to zero, output stays at zero",
                 "[meta]\nname = prop_zero_duty\ndescription = synthetic: all duties forced to "
                 "zero, output stays at zero\n\n[controller]\nkind = fixed\nfixed_duty = 0\n\n"
                 "[reference]\nvalue = 0\n\n[clock]\ndt_plant = 2e-6\nt_end = 0.2\n\n[outputs]\n"
                 "ripple_window = 0.05\n"});

  cat.push_back(
      {"prop_single_module_ideal",
       "synthetic: one module, ideal DC link, constant duty (DC-gain check)",
       "[meta]\nname = prop_single_module_ideal\ndescription = synthetic: one module, ideal DC "
       "link, constant duty (DC-gain check)\n\n[plant]\nideal_dc_link = on\nR_d = 0.005\n"
       "R_load = 0.05\n\n[topology]\nmodules_per_group = 1\ngroups = 1\nmismatch_pct = 0\n\n"
       "[controller]\nkind = fixed\nfixed_duty = 0.3\n\n[reference]\nvalue = 0\n\n[clock]\n"
       "dt_plant = 2e-6\nt_end = 0.5\n\n[outputs]\nripple_window = 0.1\n"});

  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& scenario_catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

bool catalog_has(const std::string& name) {
  for (const auto& e : scenario_catalog())
    if (e.name == name) return true;
  return false;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : scenario_catalog())
    if (e.name == name) return e;
  throw ConfigError("no catalog scenario named '" + name + "'");
}

Scenario catalog_scenario(const std::string& name) {
  const CatalogEntry& e = catalog_entry(name);
  return parse_scenario_text(e.text, "catalog:" + name);
}

Scenario resolve_scenario(const std::string& path_or_name) {
  if (std::filesystem::exists(path_or_name)) return parse_scenario_file(path_or_name);
  if (catalog_has(path_or_name)) return catalog_scenario(path_or_name);
  throw ConfigError("scenario '" + path_or_name + "' is neither a file nor a catalog name");
}

}  // namespace dcsim
