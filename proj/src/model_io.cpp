#include "dfc/model_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

#include "dfc/binary_io.hpp"

namespace dfc {
namespace {

constexpr std::uint32_t kModelVersion = 1;

bool looks_like_json(const std::filesystem::path& path) {
    if (path.extension() == ".json") return true;
    std::ifstream in(path, std::ios::binary);
    char c;
    while (in.get(c)) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

MorphableModel load_model_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open: " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(path.string() + ": invalid JSON: " + e.what());
    }
    try {
        MorphableModel m;
        const auto mean = j.at("mean_shape").get<std::vector<double>>();
        m.mean_shape = Eigen::Map<const Eigen::VectorXd>(mean.data(), mean.size());
        const int n3 = static_cast<int>(mean.size());

        auto read_basis = [&](const char* key) {
            const auto cols = j.at(key).get<std::vector<std::vector<double>>>();
            Eigen::MatrixXd b(n3, static_cast<int>(cols.size()));
            for (std::size_t k = 0; k < cols.size(); ++k) {
                if (static_cast<int>(cols[k].size()) != n3)
                    throw DataError(path.string() + ": basis column length mismatch");
                b.col(static_cast<int>(k)) =
                    Eigen::Map<const Eigen::VectorXd>(cols[k].data(), n3);
            }
            return b;
        };
        m.identity_basis = read_basis("identity_basis");
        m.expression_basis = read_basis("expression_basis");

        const auto sid = j.at("sigma_id").get<std::vector<double>>();
        const auto sexp = j.at("sigma_exp").get<std::vector<double>>();
        m.sigma_id = Eigen::Map<const Eigen::VectorXd>(sid.data(), sid.size());
        m.sigma_exp = Eigen::Map<const Eigen::VectorXd>(sexp.data(), sexp.size());

        const auto uv = j.at("uv").get<std::vector<double>>();
        if (uv.size() != static_cast<std::size_t>(2 * (n3 / 3)))
            throw DataError(path.string() + ": uv length mismatch");
        m.uv_coords.resize(n3 / 3);
        for (int v = 0; v < n3 / 3; ++v)
            m.uv_coords[v] = {uv[2 * v], uv[2 * v + 1]};

        const auto tris = j.at("triangles").get<std::vector<std::uint32_t>>();
        if (tris.size() % 3 != 0)
            throw DataError(path.string() + ": triangle list length not divisible by 3");
        for (std::size_t t = 0; t + 2 < tris.size(); t += 3)
            m.triangles.push_back({tris[t], tris[t + 1], tris[t + 2]});

        for (const auto& [name, idx] : j.at("landmarks").items())
            m.landmark_indices[name] = idx.get<std::uint32_t>();

        m.validate();
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(path.string() + ": bad model JSON: " + e.what());
    }
}

} // namespace

void save_model(const MorphableModel& model, const std::filesystem::path& path) {
    model.validate();
    BinaryWriter w(path);
    w.magic("DCMM");
    w.u32(kModelVersion);
    const std::uint32_t v = static_cast<std::uint32_t>(model.vertex_count());
    const std::uint32_t kid = static_cast<std::uint32_t>(model.identity_rank());
    const std::uint32_t kexp = static_cast<std::uint32_t>(model.expression_rank());
    w.u32(v);
    w.u32(kid);
    w.u32(kexp);
    w.array(std::span<const double>(model.mean_shape.data(), model.mean_shape.size()));
    w.array(std::span<const double>(model.identity_basis.data(),
                                    static_cast<std::size_t>(model.identity_basis.size())));
    w.array(std::span<const double>(model.expression_basis.data(),
                                    static_cast<std::size_t>(model.expression_basis.size())));
    w.array(std::span<const double>(model.sigma_id.data(), model.sigma_id.size()));
    w.array(std::span<const double>(model.sigma_exp.data(), model.sigma_exp.size()));
    for (const auto& uv : model.uv_coords) {
        w.f64(uv.x());
        w.f64(uv.y());
    }
    w.u32(static_cast<std::uint32_t>(model.triangles.size()));
    for (const auto& t : model.triangles)
        w.array(std::span<const std::uint32_t>(t.data(), 3));
    w.u32(static_cast<std::uint32_t>(model.landmark_indices.size()));
    for (const auto& [name, idx] : model.landmark_indices) {
        w.u32(static_cast<std::uint32_t>(name.size()));
        w.array(std::span<const char>(name.data(), name.size()));
        w.u32(idx);
    }
    w.close();
}

MorphableModel load_model(const std::filesystem::path& path) {
    if (looks_like_json(path)) return load_model_json(path);

    BinaryReader r(path);
    r.expect_magic("DCMM");
    const std::uint32_t version = r.u32();
    if (version != kModelVersion)
        throw DataError(path.string() + ": unsupported model version");
    const std::uint32_t v = r.u32();
    const std::uint32_t kid = r.u32();
    const std::uint32_t kexp = r.u32();
    if (v < 3 || v > 10'000'000) throw DataError(path.string() + ": implausible vertex count");

    MorphableModel m;
    m.mean_shape.resize(3 * v);
    r.array(std::span<double>(m.mean_shape.data(), m.mean_shape.size()));
    m.identity_basis.resize(3 * v, kid);
    r.array(std::span<double>(m.identity_basis.data(),
                              static_cast<std::size_t>(m.identity_basis.size())));
    m.expression_basis.resize(3 * v, kexp);
    r.array(std::span<double>(m.expression_basis.data(),
                              static_cast<std::size_t>(m.expression_basis.size())));
    m.sigma_id.resize(kid);
    r.array(std::span<double>(m.sigma_id.data(), m.sigma_id.size()));
    m.sigma_exp.resize(kexp);
    r.array(std::span<double>(m.sigma_exp.data(), m.sigma_exp.size()));
    m.uv_coords.resize(v);
    for (auto& uv : m.uv_coords) {
        uv.x() = r.f64();
        uv.y() = r.f64();
    }
    const std::uint32_t t_count = r.u32();
    m.triangles.resize(t_count);
    for (auto& t : m.triangles)
        r.array(std::span<std::uint32_t>(t.data(), 3));
    const std::uint32_t l_count = r.u32();
    for (std::uint32_t i = 0; i < l_count; ++i) {
        const std::uint32_t len = r.u32();
        if (len > 4096) throw DataError(path.string() + ": implausible landmark name length");
        std::string name(len, '\0');
        r.array(std::span<char>(name.data(), len));
        m.landmark_indices[name] = r.u32();
    }
    m.validate();
    return m;
}

void save_model_json(const MorphableModel& model, const std::filesystem::path& path) {
    model.validate();
    nlohmann::json j;
    j["format"] = "DCMM";
    j["version"] = kModelVersion;
    j["mean_shape"] = std::vector<double>(model.mean_shape.data(),
                                          model.mean_shape.data() + model.mean_shape.size());
    auto write_basis = [](const Eigen::MatrixXd& b) {
        std::vector<std::vector<double>> cols;
        for (int k = 0; k < b.cols(); ++k)
            cols.emplace_back(b.col(k).data(), b.col(k).data() + b.rows());
        return cols;
    };
    j["identity_basis"] = write_basis(model.identity_basis);
    j["expression_basis"] = write_basis(model.expression_basis);
    j["sigma_id"] = std::vector<double>(model.sigma_id.data(),
                                        model.sigma_id.data() + model.sigma_id.size());
    j["sigma_exp"] = std::vector<double>(model.sigma_exp.data(),
                                         model.sigma_exp.data() + model.sigma_exp.size());
    std::vector<double> uv;
    for (const auto& c : model.uv_coords) {
        uv.push_back(c.x());
        uv.push_back(c.y());
    }
    j["uv"] = uv;
    std::vector<std::uint32_t> tris;
    for (const auto& t : model.triangles)
        tris.insert(tris.end(), t.begin(), t.end());
    j["triangles"] = tris;
    j["landmarks"] = model.landmark_indices;

    std::ofstream out(path);
    if (!out) throw DataError("cannot open for writing: " + path.string());
    out << j.dump(1) << "\n";
    if (!out) throw DataError("write failed: " + path.string());
}

} // namespace dfc
