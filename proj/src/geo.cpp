#include "cnetplan/geo.hpp"

#include <algorithm>
#include <cmath>

namespace cnetplan::geo {

namespace {
constexpr double kPi = 3.14159265358979323846;

double deg2rad(double deg) { return deg * kPi / 180.0; }
}  // namespace

double normalize_lon(double lon_deg) {
  double x = std::fmod(lon_deg + 180.0, 360.0);
  if (x < 0.0) x += 360.0;
  return x - 180.0;
}

bool valid_latlon(double lat_deg, double lon_deg) {
  return std::isfinite(lat_deg) && std::isfinite(lon_deg) &&
         lat_deg >= -90.0 && lat_deg <= 90.0 && lon_deg >= -180.0 &&
         lon_deg <= 180.0;
}

GeoPoint make_geopoint(double lat_deg, double lon_deg) {
  if (!valid_latlon(lat_deg, lon_deg)) {
    throw std::invalid_argument("latitude/longitude out of bounds: lat=" +
                                std::to_string(lat_deg) +
                                " lon=" + std::to_string(lon_deg));
  }
  return GeoPoint{lat_deg, normalize_lon(lon_deg)};
}

double great_circle_km(const GeoPoint& a, const GeoPoint& b,
                       const PropagationModel& model) {
  const double lat1 = deg2rad(a.lat);
  const double lat2 = deg2rad(b.lat);
  const double dlat = lat2 - lat1;
  const double dlon = deg2rad(b.lon - a.lon);

  const double sin_lat = std::sin(dlat / 2.0);
  const double sin_lon = std::sin(dlon / 2.0);
  double h = sin_lat * sin_lat +
             std::cos(lat1) * std::cos(lat2) * sin_lon * sin_lon;
  h = std::clamp(h, 0.0, 1.0);
  return model.earth_radius_km * 2.0 * std::asin(std::sqrt(h));
}

double c_latency_rtt_ms(const GeoPoint& a, const GeoPoint& b,
                        const PropagationModel& model) {
  return 2.0 * great_circle_km(a, b, model) / model.c_vacuum_km_s * 1000.0;
}

double medium_latency_rtt_ms(double path_km, double speed_fraction,
                             const PropagationModel& model) {
  if (!(speed_fraction > 0.0)) {
    throw std::invalid_argument("speed_fraction must be > 0");
  }
  if (path_km < 0.0) {
    throw std::invalid_argument("path_km must be >= 0");
  }
  return 2.0 * path_km / (speed_fraction * model.c_vacuum_km_s) * 1000.0;
}

double inflation(double measured_ms, double c_latency_ms) {
  if (!(c_latency_ms > 0.0)) {
    throw std::invalid_argument("c_latency_ms must be > 0");
  }
  return measured_ms / c_latency_ms;
}

double reachable_radius_km(double rtt_budget_ms, double speed_fraction,
                           const PropagationModel& model) {
  return (rtt_budget_ms / 2.0) / 1000.0 * speed_fraction *
         model.c_vacuum_km_s;
}

}  // namespace cnetplan::geo
