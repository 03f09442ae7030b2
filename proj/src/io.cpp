#include "arithmaps/io.hpp"

#include <json.hpp>

#include <sstream>

namespace arithmaps {

std::string pgm_p2(const std::vector<std::vector<ProjValue>>& grid, uint64_t r,
                   const std::string& comment) {
    std::ostringstream os;
    const size_t h = grid.size();
    const size_t w = h ? grid[0].size() : 0;
    os << "P2\n";
    if (!comment.empty()) os << "# " << comment << "\n";
    os << w << " " << h << "\n" << r << "\n";
    for (const auto& row : grid) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << " ";
            if (row[j].is_infinity())
                os << 0;
            else
                os << (r - row[j].value().index());
        }
        os << "\n";
    }
    return os.str();
}

std::string tsv_row(const std::vector<std::string>& cells) {
    std::string s;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) s += '\t';
        s += cells[i];
    }
    s += '\n';
    return s;
}

namespace {
nlohmann::json point_json(const OmegaPoint& pt) {
    nlohmann::json j;
    switch (pt.kind) {
        case OmegaPoint::Kind::affine:
            j["stratum"] = "affine";
            j["x"] = pt.a.to_string();
            j["y"] = pt.b.to_string();
            break;
        case OmegaPoint::Kind::e1:
            j["stratum"] = "E1";
            j["patch"] = patch_name(pt.patch);
            j["coord"] = pt.a.to_string();
            break;
        default:
            j["stratum"] = "E2";
            j["patch"] = patch_name(pt.patch);
            j["coord"] = pt.a.to_string();
            break;
    }
    return j;
}
}  // namespace

std::string omega_json(const OmegaSpace& space, bool with_edges) {
    nlohmann::json j;
    j["r"] = space.ctx()->r();
    j["n"] = space.n();
    j["minimal"] = space.minimal();
    j["count"] = space.size();
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& pt : space.points()) pts.push_back(point_json(pt));
    j["points"] = std::move(pts);
    if (with_edges) {
        nlohmann::json edges = nlohmann::json::array();
        for (const auto& pt : space.points()) {
            nlohmann::json e;
            e["from"] = pt.to_string();
            e["to"] = phi_step(pt, space).to_string();
            edges.push_back(std::move(e));
        }
        j["edges"] = std::move(edges);
    }
    return j.dump(2) + "\n";
}

std::string omega_dot(const OmegaSpace& space, bool autonomous) {
    std::ostringstream os;
    os << "digraph omega {\n";
    os << "  label=\"r=" << space.ctx()->r() << (space.minimal() ? " minimal" : " full")
       << " n=" << space.n() << "\";\n";
    auto cycles = orbit_decomposition(space, autonomous);
    size_t ci = 0;
    for (const auto& cyc : cycles) {
        os << "  subgraph cluster_" << ci++ << " {\n";
        for (size_t i = 0; i < cyc.size(); ++i) {
            const auto& from = cyc[i];
            const auto& to = cyc[(i + 1) % cyc.size()];
            os << "    \"" << from.to_string() << "\" -> \"" << to.to_string() << "\";\n";
        }
        os << "  }\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace arithmaps
