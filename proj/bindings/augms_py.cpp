#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "augms/index.hpp"
#include "augms/io.hpp"
#include "augms/fasta.hpp"

namespace py = pybind11;
using namespace augms;

namespace {

std::vector<u8> bytes_of(const py::bytes& b) {
    std::string s = b;
    return std::vector<u8>(s.begin(), s.end());
}

build_options options_from(const std::string& encoding, const std::string& lce,
                           const std::string& storage) {
    build_options opt;
    auto e = encoding_from_string(encoding);
    if (!e) throw std::invalid_argument("unknown encoding: " + encoding);
    opt.encoding = *e;
    if (lce == "naive")
        opt.lce = lce_kind::naive;
    else if (lce == "lcp-rmq")
        opt.lce = lce_kind::lcp_rmq;
    else
        throw std::invalid_argument("unknown lce backend: " + lce);
    if (storage == "array")
        opt.storage = thr_storage::array;
    else if (storage == "sigma-bv")
        opt.storage = thr_storage::sigma_bv;
    else
        throw std::invalid_argument("unknown threshold storage: " + storage);
    return opt;
}

// Thin handle so python sees one object with queries, stats, and io.
struct py_index {
    ms_index ix;

    std::vector<std::pair<u64, u64>> ms(const py::bytes& pattern, bool augmented) {
        auto p = bytes_of(pattern);
        query_stats st;
        auto v = ix.query(p.data(), p.size(), augmented ? ms_mode::augmented : ms_mode::baseline,
                          st);
        last = st;
        std::vector<std::pair<u64, u64>> out;
        out.reserve(p.size());
        for (u64 i = 1; i < v.size(); ++i) out.emplace_back(v[i].pos, v[i].len);
        return out;
    }

    std::vector<std::tuple<u64, u64, u64>> mems(const py::bytes& pattern, u64 min_len,
                                                bool augmented) {
        auto p = bytes_of(pattern);
        query_stats st;
        auto v = ix.query(p.data(), p.size(), augmented ? ms_mode::augmented : ms_mode::baseline,
                          st);
        last = st;
        std::vector<std::tuple<u64, u64, u64>> out;
        for (const auto& m : extract_mems(v, min_len)) out.emplace_back(m.i, m.pos, m.len);
        return out;
    }

    py::dict stats() const {
        py::dict d;
        d["direct_extensions"] = last.direct_extensions;
        d["jumps"] = last.jumps;
        d["lce_calls"] = last.lce_calls;
        d["lce_skips"] = last.lce_skips;
        return d;
    }

    query_stats last;
};

}  // namespace

PYBIND11_MODULE(_augms, m) {
    m.doc() = "Run-length BWT index with matching statistics queries";

    py::class_<py_index>(m, "Index")
        .def_property_readonly("n", [](const py_index& s) { return s.ix.n(); })
        .def_property_readonly("r", [](const py_index& s) { return s.ix.r(); })
        .def_property_readonly("encoding",
                               [](const py_index& s) { return to_string(s.ix.encoding()); })
        .def("ms", &py_index::ms, py::arg("pattern"), py::arg("augmented") = true,
             "Matching statistics: list of (pos, len), one per pattern position")
        .def("mems", &py_index::mems, py::arg("pattern"), py::arg("min_len") = 1,
             py::arg("augmented") = true,
             "Maximal exact matches: list of (i, pos, len), positions 1-based")
        .def("stats", &py_index::stats, "Counters from the most recent query")
        .def("save", [](const py_index& s, const std::string& path) { save_index(s.ix, path); });

    m.def(
        "build",
        [](const py::bytes& data, const std::string& encoding, const std::string& lce,
           const std::string& storage) {
            auto ix = build_index(text::build(bytes_of(data)), options_from(encoding, lce,
                                                                            storage));
            return py_index{std::move(ix), {}};
        },
        py::arg("data"), py::arg("encoding") = "full", py::arg("lce") = "naive",
        py::arg("storage") = "array", "Build an index over raw bytes");

    m.def(
        "build_from_file",
        [](const std::string& path, const std::string& encoding, const std::string& lce,
           const std::string& storage) {
            auto ix = build_index(text::build(read_build_input(path, false, false)),
                                  options_from(encoding, lce, storage));
            return py_index{std::move(ix), {}};
        },
        py::arg("path"), py::arg("encoding") = "full", py::arg("lce") = "naive",
        py::arg("storage") = "array", "Build an index from FASTA or raw bytes on disk");

    m.def(
        "load", [](const std::string& path) { return py_index{load_index(path), {}}; },
        py::arg("path"), "Load an index written by save()");
}
