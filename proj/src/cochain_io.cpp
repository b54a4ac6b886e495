#include "dlb/cochain_io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>

namespace dlb {

namespace {

using nlohmann::json;

json to_json(const Cochain& form) {
    json doc;
    doc["degree"] = form.degree();
    doc["n"] = form.window().half_width;
    json components = json::array();
    for (int c = 0; c < form.component_count(); ++c) {
        json arr = json::array();
        for (const Complex& v : form.component(c)) {
            arr.push_back(json::array({v.real(), v.imag()}));
        }
        components.push_back(std::move(arr));
    }
    doc["components"] = std::move(components);
    return doc;
}

Cochain from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("degree") || !doc.contains("n") ||
        !doc.contains("components"))
        throw std::runtime_error("cochain payload: missing degree/n/components");
    int degree = doc.at("degree").get<int>();
    int n = doc.at("n").get<int>();
    if (degree < 0 || degree > 2)
        throw std::runtime_error("cochain payload: degree must be 0, 1 or 2");
    if (n < 0) throw std::runtime_error("cochain payload: negative half-width");

    const json& components = doc.at("components");
    if (!components.is_array() ||
        static_cast<int>(components.size()) != component_count_for_degree(degree))
        throw std::runtime_error("cochain payload: component array count mismatch");

    Window window(n);
    Cochain form(degree, window);
    for (int c = 0; c < form.component_count(); ++c) {
        const json& arr = components.at(static_cast<std::size_t>(c));
        if (!arr.is_array() || arr.size() != window.point_count())
            throw std::runtime_error("cochain payload: coefficient array length mismatch");
        auto& data = form.component_mutable(c);
        for (std::size_t i = 0; i < data.size(); ++i) {
            const json& pair = arr.at(i);
            if (!pair.is_array() || pair.size() != 2)
                throw std::runtime_error("cochain payload: coefficient must be [re, im]");
            double re = pair.at(0).get<double>();
            double im = pair.at(1).get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw std::runtime_error("cochain payload: non-finite coefficient");
            data[i] = Complex(re, im);
        }
    }
    return form;
}

}  // namespace

void save_cochain(const Cochain& form, std::ostream& out) {
    out << to_json(form).dump() << '\n';
}

void save_cochain(const Cochain& form, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_cochain: cannot open " + path);
    save_cochain(form, out);
}

Cochain load_cochain(std::istream& in) {
    try {
        return from_json(json::parse(in));
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("cochain payload: ") + e.what());
    }
}

Cochain load_cochain(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_cochain: cannot open " + path);
    return load_cochain(in);
}

}  // namespace dlb
