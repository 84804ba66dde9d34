#pragma once

// Canonical JSON forms of the core objects.  Key order is fixed so that
// identical inputs always serialize to identical bytes.

#include "wfusion/qchar.hpp"
#include "wfusion/ringkit.hpp"
#include "wfusion/rootdata.hpp"
#include "wfusion/walg.hpp"

#include <json.hpp>

namespace wfusion::json_io {

using json = nlohmann::ordered_json;

json weight_to_json(const rootdata::AffineWeight& w);
json ring_to_json(const ringkit::FusionRing& ring);
std::string ring_to_csv(const ringkit::FusionRing& ring);
json wlabel_to_json(const walg::WLabel& x);
json series_to_json(const qchar::QSeries& s);

} // namespace wfusion::json_io
