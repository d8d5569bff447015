#pragma once

#include <map>
#include <string>

#include "packest/reduction.hpp"

namespace packest {

// Electrochemical, thermal, and derived reduced-order parameters of one
// cell. Raw fields follow the parameter file; the per-step coefficients
// used by the discrete model are filled in by finalize().
struct CellParams {
  struct Solid {
    double ds_ref;                 // m^2/s (negative electrode)
    double rs_neg, rs_pos;         // particle radii, m
    double cs_max_neg, cs_max_pos; // mol/m^3
    double as_neg, as_pos;         // specific interfacial areas, 1/m
    double l_neg, l_pos, l_sep;    // region thicknesses, m
    double beta_s;                 // in (0,1)
    double n_li_s;                 // total solid-phase lithium, mol
  } solid;

  struct Electrolyte {
    double eps_e_neg, eps_e_sep, eps_e_pos;
    double de_ref;     // m^2/s at (ce0, t_ref); <= 0 means "use the ce0 correlation"
    double t_plus;
    double brug;       // Bruggeman exponent
    double a_cross;    // m^2
    double n_li_e;     // mol
    double kappa_ref;  // conductivity at t_ref (area-folded, see params file)
    double ce0;        // mol/m^3
  } elec;

  struct Kinetics {
    double kn_ref_neg, kn_ref_pos;  // reaction rate constants at t_ref
    double alpha0;                  // apparent transfer coefficient
    double rc;                      // film resistance, ohm
  } kin;

  // Thermal parameters. Either the physical set (volumetric heat capacities
  // plus W/K conductances, converted internally using ts_sample and the cell
  // volume) or the per-step dimensionless coefficients directly.
  struct Thermal {
    bool direct = false;
    // physical mode
    double rho_cp_core = 0.0, rho_cp_surf = 0.0;  // J/(m^3 K)
    double kc = 0.0, ke = 0.0, h = 0.0;           // W/K
    // direct mode (per-step)
    double kc_core_step_in = 0.0, kc_surf_step_in = 0.0;
    double h_step_in = 0.0, ke_step_in = 0.0;
    double heat_core_step_in = 0.0, heat_surf_step_in = 0.0;  // K/W per step
    // both modes
    double r_ic = 0.0;  // interconnection resistance, ohm
  } thermal;

  struct Arrhenius {
    double e_ds, e_de, e_kn, e_kappa;  // activation energies, J/mol
    double t_ref;                      // K
  } arr;

  EhmParams reduced;  // from the electrolyte reduction
  double ts_sample = 1.0;

  // Derived per-step quantities (valid after finalize()).
  struct Derived {
    double g_s_ref;        // Ds_ref/Rs^2, 1/s
    double b_s;            // beta_s(1-beta_s)
    double gamma_s_step;   // SOC per A over one step
    double gamma_e_step;   // mol/m^3 per A over one step
    double rho_stoich, sigma_stoich;  // positive-electrode stoichiometry map
    double rho_e, sigma_e;            // positive-boundary electrolyte map
    double kc_core_step, kc_surf_step, h_step, ke_step;
    double heat_core_step, heat_surf_step;  // K per W over one step
  } dd;

  // Computes derived coefficients, runs the electrolyte reduction when
  // `reduced` is not already set, and asserts the Euler stability bounds.
  void finalize();

  ElectrolyteTf electrolyte_tf() const;
  double de_at_ce0() const;

  // Nominal coulombic capacity implied by gamma_s, in Ah.
  double capacity_ah() const;
};

// Key-value parameter file (one "packest-params v1" header line, then
// "key = value" rows; '#' comments).
CellParams load_cell_params(const std::string& path, double ts_sample);
CellParams parse_cell_params(const std::map<std::string, double>& kv, double ts_sample);

}  // namespace packest
