#pragma once

#include <stdexcept>

namespace cnetplan::geo {

/// A point on the Earth's surface. Latitude in [-90, 90] degrees,
/// longitude normalized to the half-open interval [-180, 180).
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;
};

/// Maps any finite longitude onto [-180, 180).
double normalize_lon(double lon_deg);

/// Validating constructor for external input. Rejects latitudes outside
/// [-90, 90] and longitudes outside [-180, 180]; a longitude of exactly
/// 180 normalizes to -180.
GeoPoint make_geopoint(double lat_deg, double lon_deg);

bool valid_latlon(double lat_deg, double lon_deg);

/// Propagation constants. The vacuum speed of light is the defined SI
/// constant; the fiber factor reflects the refractive index of silica.
struct PropagationModel {
  double c_vacuum_km_s = 299792.458;
  double fiber_factor = 2.0 / 3.0;
  double earth_radius_km = 6371.0;
};

/// Great-circle distance in km on a sphere of model.earth_radius_km,
/// computed with the haversine formulation (stable at small angles).
double great_circle_km(const GeoPoint& a, const GeoPoint& b,
                       const PropagationModel& model = {});

/// Round-trip time in ms for light in vacuum along the great circle.
double c_latency_rtt_ms(const GeoPoint& a, const GeoPoint& b,
                        const PropagationModel& model = {});

/// Round-trip time in ms over path_km of a medium propagating at
/// speed_fraction * c. Rejects speed_fraction <= 0.
double medium_latency_rtt_ms(double path_km, double speed_fraction,
                             const PropagationModel& model = {});

/// Ratio of a measured time to the pair's c-latency. May be < 1 (e.g. a
/// DNS resolver closer than the server). Rejects c_latency_ms <= 0.
double inflation(double measured_ms, double c_latency_ms);

/// How far a signal at speed_fraction * c can travel and return within
/// rtt_budget_ms.
double reachable_radius_km(double rtt_budget_ms, double speed_fraction,
                           const PropagationModel& model = {});

}  // namespace cnetplan::geo
