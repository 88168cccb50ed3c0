#include "sicmub/io.hpp"

#include <fstream>

#include "sicmub/errors.hpp"

namespace sicmub {

using nlohmann::json;

namespace {

std::size_t read_dim(const json &j) {
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() ||
        j["dim"].get<long long>() < 1) {
        throw DomainError("JSON document needs a positive integer \"dim\"");
    }
    return j["dim"].get<std::size_t>();
}

const json &field(const json &j, const char *name, std::size_t len) {
    if (!j.contains(name) || !j[name].is_array() || j[name].size() != len) {
        throw DomainError(std::string("field \"") + name + "\" must be an array of length " +
                          std::to_string(len));
    }
    return j[name];
}

double number(const json &x) {
    if (!x.is_number()) {
        throw DomainError("expected a number in JSON array");
    }
    return x.get<double>();
}

json read_file(const std::filesystem::path &p) {
    std::ifstream in(p);
    if (!in) {
        throw IoError("cannot open " + p.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw IoError("cannot parse " + p.string() + ": " + e.what());
    }
}

} // namespace

json to_json(const ComplexMatrix &m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json rr = json::array();
        json ii = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            rr.push_back(m(i, k).real());
            ii.push_back(m(i, k).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
    }
    return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

json to_json(const DensityMatrix &rho) { return to_json(rho.mat()); }

json to_json(const MubSet &mubs) {
    json bases = json::array();
    for (const auto &b : mubs.bases()) {
        json vecs = json::array();
        for (const auto &v : b.vectors()) {
            json re = json::array();
            json im = json::array();
            for (const auto &z : v.entries()) {
                re.push_back(z.real());
                im.push_back(z.imag());
            }
            vecs.push_back({{"re", std::move(re)}, {"im", std::move(im)}});
        }
        bases.push_back(std::move(vecs));
    }
    return {{"dim", mubs.dim()}, {"count", mubs.count()}, {"bases", std::move(bases)}};
}

DensityMatrix density_matrix_from_json(const json &j) {
    const std::size_t d = read_dim(j);
    const auto &re = field(j, "re", d);
    const auto &im = field(j, "im", d);
    ComplexMatrix m = ComplexMatrix::zeros(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        if (!re[r].is_array() || re[r].size() != d || !im[r].is_array() ||
            im[r].size() != d) {
            throw DomainError("density matrix rows must have length dim");
        }
        for (std::size_t c = 0; c < d; ++c) {
            m(r, c) = Complex(number(re[r][c]), number(im[r][c]));
        }
    }
    return DensityMatrix::from_matrix(std::move(m));
}

LoadedFiducial fiducial_from_json(const json &j) {
    const std::size_t d = read_dim(j);
    const auto &re = field(j, "re", d);
    const auto &im = field(j, "im", d);
    ComplexVector v(d);
    for (std::size_t k = 0; k < d; ++k) {
        v[k] = Complex(number(re[k]), number(im[k]));
    }
    const double n = v.norm();
    if (!(n > 0.0)) {
        throw DomainError("fiducial vector is zero");
    }
    return {v.normalized(), 1.0 / n};
}

DensityMatrix load_density_matrix(const std::filesystem::path &p) {
    return density_matrix_from_json(read_file(p));
}

LoadedFiducial load_fiducial(const std::filesystem::path &p) {
    return fiducial_from_json(read_file(p));
}

} // namespace sicmub
