#include "convchain/report_json.hpp"

namespace convchain {

void write_summary(JsonWriter& jw, const SimSummary& s) {
    jw.begin_object();
    jw.key("n").value(s.n);
    jw.key("samples").value(static_cast<long long>(s.samples));
    jw.key("seed").value(s.seed);
    jw.key("max_k").value(s.max_k);
    jw.key("mean_vertex_count").value(s.mean_vertex_count);
    jw.key("se_mean_vertex_count").value(s.se_mean_vertex_count);
    jw.key("var_vertex_count").value(s.var_vertex_count);
    jw.key("mean_vertex_count_sq").value(s.mean_vertex_count_sq);
    jw.key("se_mean_vertex_count_sq").value(s.se_mean_vertex_count_sq);
    jw.key("volume_moments").begin_array();
    for (size_t j = 0; j < s.mean_volume_pow.size(); ++j) {
        jw.begin_object();
        jw.key("k").value(static_cast<int>(j + 1));
        jw.key("mean").value(s.mean_volume_pow[j]);
        jw.key("se").value(s.se_volume_pow[j]);
        jw.end_object();
    }
    jw.end_array();
    jw.key("vertex_counts").begin_array();
    for (size_t k = 0; k < s.vertex_count_hist.size(); ++k) {
        jw.begin_object();
        jw.key("k").value(static_cast<int>(k));
        jw.key("count").value(s.vertex_count_hist[k]);
        jw.key("frequency").value(s.vertex_frequency[k]);
        jw.end_object();
    }
    jw.end_array();
    jw.end_object();
}

void write_report(JsonWriter& jw, const CompareReport& r) {
    jw.begin_object();
    jw.key("ok").value(r.ok);
    if (!r.error.empty()) jw.key("error").value(r.error);
    jw.key("stats").begin_array();
    for (const auto& st : r.stats) {
        jw.begin_object();
        jw.key("name").value(st.name);
        jw.key("empirical").value(st.empirical);
        jw.key("exact").value(st.exact);
        jw.key("se").value(st.se);
        jw.key("z").value(st.z);
        jw.key("pass").value(st.pass);
        jw.end_object();
    }
    jw.end_array();
    jw.key("chi_square").begin_object();
    jw.key("statistic").value(r.chi_statistic);
    jw.key("dof").value(r.chi_dof);
    jw.key("p_value").value(r.chi_p_value);
    jw.key("pass").value(r.chi_pass);
    jw.end_object();
    jw.key("all_pass").value(r.all_pass);
    jw.end_object();
}

std::string summary_to_json(const SimSummary& summary) {
    JsonWriter jw;
    write_summary(jw, summary);
    return jw.str();
}

std::string report_to_json(const CompareReport& report) {
    JsonWriter jw;
    write_report(jw, report);
    return jw.str();
}

}  // namespace convchain
