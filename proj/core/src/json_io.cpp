#include "wfusion/json_io.hpp"

#include <sstream>

namespace wfusion::json_io {

json weight_to_json(const rootdata::AffineWeight& w)
{
    json out = json::array();
    for (long a : w.labels)
        out.push_back(a);
    return out;
}

json ring_to_json(const ringkit::FusionRing& ring)
{
    json out;
    out["basis"] = ring.labels;
    out["unit"] = ring.unit;
    out["pic"] = ring.pic;
    json cs = json::array();
    for (const auto& [ij, row] : ring.constants) {
        json entry = json::array();
        entry.push_back(ij.first);
        entry.push_back(ij.second);
        json targets = json::array();
        for (const auto& [k, m] : row) {
            json t = json::array();
            t.push_back(k);
            t.push_back(m.str());
            targets.push_back(t);
        }
        entry.push_back(targets);
        cs.push_back(entry);
    }
    out["constants"] = cs;
    if (!ring.h.empty()) {
        json hs = json::array();
        for (const auto& x : ring.h)
            hs.push_back(rat_str(x));
        out["h"] = hs;
    }
    return out;
}

std::string ring_to_csv(const ringkit::FusionRing& ring)
{
    std::ostringstream os;
    os << "i,j,k,mult\n";
    for (const auto& [ij, row] : ring.constants)
        for (const auto& [k, m] : row)
            os << ij.first << "," << ij.second << "," << k << "," << m.str() << "\n";
    return os.str();
}

json wlabel_to_json(const walg::WLabel& x)
{
    json out;
    out["lambda"] = weight_to_json(x.lambda);
    out["a"] = x.a;
    return out;
}

json series_to_json(const qchar::QSeries& s)
{
    json out;
    out["order"] = rat_str(s.cap);
    json terms = json::array();
    for (const auto& [qe, zp] : s.terms) {
        for (const auto& [ze, c] : zp) {
            if (c == 0)
                continue;
            json t;
            t["q"] = rat_str(qe);
            if (ze != 0)
                t["z"] = rat_str(ze);
            t["c"] = rat_str(c);
            terms.push_back(t);
        }
    }
    out["terms"] = terms;
    return out;
}

} // namespace wfusion::json_io
