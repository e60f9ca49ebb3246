#include "hitset/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hitset {

std::string to_string(InstanceKind k) {
    switch (k) {
        case InstanceKind::bottomless: return "bottomless";
        case InstanceKind::separated_disks: return "separated-disks";
        case InstanceKind::disks: return "disks";
        case InstanceKind::homothets: return "homothets";
    }
    return "?";
}

InstanceKind kind_from_string(const std::string& s) {
    if (s == "bottomless") return InstanceKind::bottomless;
    if (s == "separated-disks") return InstanceKind::separated_disks;
    if (s == "disks") return InstanceKind::disks;
    if (s == "homothets") return InstanceKind::homothets;
    throw invalid_input_error("unknown instance kind: " + s);
}

bool object_contains(const Instance& inst, const GeometricObject& obj, const Point& p) {
    if (const auto* d = std::get_if<Disk>(&obj)) return disk_contains(*d, p);
    if (const auto* r = std::get_if<BottomlessRect>(&obj)) {
        return p.x >= static_cast<double>(r->a) && p.x < static_cast<double>(r->b) &&
               p.y >= 0.0 && p.y < static_cast<double>(r->c);
    }
    const auto& h = std::get<HomothetObject>(obj);
    if (!inst.body) throw invalid_input_error("homothet object without a body polygon");
    Point u{(p.x - h.t.x) / h.scale, (p.y - h.t.y) / h.scale};
    return inst.body->contains(u, 1e-9);
}

bool object_contains(const Instance& inst, std::size_t obj_index, const Point& p) {
    return object_contains(inst, inst.objects.at(obj_index), p);
}

namespace {

using ojson = nlohmann::ordered_json;

ojson point_to_json(const Point& p) { return ojson::array({p.x, p.y}); }

Point point_from_json(const ojson& j) {
    if (!j.is_array() || j.size() != 2) throw invalid_input_error("bad point in JSON");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
    ojson j;
    j["name"] = inst.name;
    j["params"] = {{"kind", to_string(inst.kind)},
                   {"cap", inst.cap},
                   {"seed", inst.seed}};
    ojson pts = ojson::array();
    for (const Point& p : inst.points) pts.push_back(point_to_json(p));
    j["points"] = std::move(pts);
    if (inst.body) {
        ojson body = ojson::array();
        for (const Point& p : inst.body->vertices) body.push_back(point_to_json(p));
        j["body"] = std::move(body);
    }
    ojson objs = ojson::array();
    for (const GeometricObject& o : inst.objects) {
        ojson jo;
        if (const auto* d = std::get_if<Disk>(&o)) {
            jo["type"] = "disk";
            jo["c"] = point_to_json(d->center);
            jo["r"] = d->radius;
        } else if (const auto* r = std::get_if<BottomlessRect>(&o)) {
            jo["type"] = "bottomless";
            jo["a"] = r->a;
            jo["b"] = r->b;
            jo["c"] = r->c;
        } else {
            const auto& h = std::get<HomothetObject>(o);
            jo["type"] = "homothet";
            jo["scale"] = h.scale;
            jo["t"] = point_to_json(h.t);
        }
        objs.push_back(std::move(jo));
    }
    j["objects"] = std::move(objs);
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw invalid_input_error(std::string("instance JSON parse error: ") + e.what());
    }
    Instance inst;
    try {
        inst.name = j.at("name").get<std::string>();
        const auto& params = j.at("params");
        inst.kind = kind_from_string(params.at("kind").get<std::string>());
        inst.cap = params.at("cap").get<double>();
        inst.seed = params.at("seed").get<std::uint64_t>();
        for (const auto& jp : j.at("points")) inst.points.push_back(point_from_json(jp));
        if (j.contains("body")) {
            std::vector<Point> verts;
            for (const auto& jp : j.at("body")) verts.push_back(point_from_json(jp));
            inst.body = make_convex_polygon(std::move(verts));
        }
        for (const auto& jo : j.at("objects")) {
            std::string type = jo.at("type").get<std::string>();
            if (type == "disk") {
                inst.objects.push_back(
                    Disk{point_from_json(jo.at("c")), jo.at("r").get<double>()});
            } else if (type == "bottomless") {
                inst.objects.push_back(BottomlessRect{jo.at("a").get<std::int64_t>(),
                                                      jo.at("b").get<std::int64_t>(),
                                                      jo.at("c").get<std::int64_t>()});
            } else if (type == "homothet") {
                inst.objects.push_back(
                    HomothetObject{jo.at("scale").get<double>(), point_from_json(jo.at("t"))});
            } else {
                throw invalid_input_error("unknown object type: " + type);
            }
        }
    } catch (const ojson::exception& e) {
        throw invalid_input_error(std::string("instance JSON schema error: ") + e.what());
    }
    return inst;
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input_error("cannot open for writing: " + path);
    out << instance_to_json(inst);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input_error("cannot open instance file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

}  // namespace hitset
