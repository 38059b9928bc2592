#include "pdc/observables.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pdc::observables {

namespace {

ObservableSpec diagonal(std::string name, std::function<double(const FockLabel&)> value) {
    ObservableSpec obs;
    obs.name = std::move(name);
    obs.band1 = 0;
    obs.band2 = 0;
    obs.hermitian = true;
    obs.element = [value = std::move(value)](const FockLabel& bra, const FockLabel& ket) {
        if (bra != ket) return Complex{0.0, 0.0};
        return Complex{value(ket), 0.0};
    };
    return obs;
}

}  // namespace

ObservableSpec identity() {
    return diagonal("identity", [](const FockLabel&) { return 1.0; });
}

ObservableSpec photon_number_1() {
    return diagonal("n1", [](const FockLabel& l) { return double(l.n1); });
}

ObservableSpec photon_number_2() {
    return diagonal("n2", [](const FockLabel& l) { return double(l.n2); });
}

ObservableSpec charge() {
    return diagonal("R", [](const FockLabel& l) { return double(l.n1 + 2 * l.n2); });
}

ObservableSpec parity() {
    return diagonal("parity", [](const FockLabel& l) { return double(l.n1 % 2); });
}

ObservableSpec hamiltonian(const ModelParams& params) {
    ObservableSpec obs;
    obs.name = "H";
    obs.band1 = 2;
    obs.band2 = 1;
    obs.hermitian = true;
    obs.element = [params](const FockLabel& bra, const FockLabel& ket) -> Complex {
        const int d1 = bra.n1 - ket.n1;
        const int d2 = bra.n2 - ket.n2;
        if (d1 == 0 && d2 == 0) {
            const double n1 = ket.n1, n2 = ket.n2;
            return Complex{params.omega1 * n1 + params.omega2 * n2 + params.K1 * n1 * n1 +
                               params.K2 * n2 * n2,
                           0.0};
        }
        if (d1 == 2 && d2 == -1) {
            // g a1*^2 a2 sqrt(n2)
            const double n1 = ket.n1, n2 = ket.n2;
            return Complex{params.g * n2 * std::sqrt((n1 + 1) * (n1 + 2)), 0.0};
        }
        if (d1 == -2 && d2 == 1) {
            // g sqrt(n2) a1^2 a2*
            const double n1 = bra.n1, n2 = bra.n2;
            return Complex{params.g * n2 * std::sqrt((n1 + 1) * (n1 + 2)), 0.0};
        }
        return Complex{0.0, 0.0};
    };
    return obs;
}

ObservableSpec from_table_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    ObservableSpec obs;
    obs.name = j.value("name", "table");
    obs.hermitian = j.value("hermitian", true);

    struct Key {
        FockLabel bra, ket;
        bool operator<(const Key& o) const {
            auto tup = [](const Key& k) {
                return std::tuple(k.bra.n1, k.bra.n2, k.ket.n1, k.ket.n2);
            };
            return tup(*this) < tup(o);
        }
    };
    auto table = std::make_shared<std::map<Key, Complex>>();
    int band1 = 0, band2 = 0;
    for (const auto& rec : j.at("entries")) {
        const FockLabel ket{rec.at("n1").get<int>(), rec.at("n2").get<int>()};
        const FockLabel bra{rec.at("n1p").get<int>(), rec.at("n2p").get<int>()};
        if (ket.n1 < 0 || ket.n2 < 0 || bra.n1 < 0 || bra.n2 < 0)
            throw std::invalid_argument("observable table: negative photon count");
        const Complex v{rec.value("re", 0.0), rec.value("im", 0.0)};
        (*table)[Key{bra, ket}] += v;
        band1 = std::max(band1, std::abs(bra.n1 - ket.n1));
        band2 = std::max(band2, std::abs(bra.n2 - ket.n2));
        if (obs.hermitian && !(bra == ket)) (*table)[Key{ket, bra}] += std::conj(v);
    }
    obs.band1 = band1;
    obs.band2 = band2;
    obs.element = [table](const FockLabel& bra, const FockLabel& ket) -> Complex {
        auto it = table->find(Key{bra, ket});
        return it == table->end() ? Complex{0.0, 0.0} : it->second;
    };
    return obs;
}

ObservableSpec from_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open observable table: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_table_json(ss.str());
}

ObservableSpec by_name(const std::string& name, const ModelParams& params) {
    if (!name.empty() && name.front() == '@') return from_table_file(name.substr(1));
    if (name == "n1") return photon_number_1();
    if (name == "n2") return photon_number_2();
    if (name == "R") return charge();
    if (name == "parity") return parity();
    if (name == "H") return hamiltonian(params);
    if (name == "identity") return identity();
    throw std::invalid_argument("unknown observable: " + name +
                                " (expected n1, n2, R, parity, H, identity, or @file)");
}

}  // namespace pdc::observables
