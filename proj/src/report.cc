#include <strongdom/report.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>

using std::string;
using std::vector;

namespace strongdom
{
    namespace
    {
        auto ms_of(const ClaimResult & r, const ReportOptions & options) -> std::int64_t
        {
            return options.include_timings ? r.ms : 0;
        }

        auto join_params(const ClaimResult & r, const char * separator) -> string
        {
            string result;
            for (std::size_t i = 0 ; i < r.params.size() ; ++i)
                result += (i ? separator : "") + std::to_string(r.params[i]);
            return result;
        }

        auto csv_field(const string & s) -> string
        {
            if (s.find_first_of(",\"\n\r") == string::npos)
                return s;
            string result = "\"";
            for (char c : s)
                result += (c == '"') ? string("\"\"") : string(1, c);
            return result + "\"";
        }
    }

    auto report_json(const vector<ClaimResult> & results, const ReportOptions & options) -> string
    {
        auto array = nlohmann::ordered_json::array();
        for (auto & r : results) {
            nlohmann::ordered_json entry;
            entry["id"] = r.id;
            entry["params"] = r.params;
            entry["expected"] = r.expected;
            entry["computed"] = r.computed;
            entry["status"] = string(status_name(r.status));
            entry["ms"] = ms_of(r, options);
            array.push_back(std::move(entry));
        }
        return array.dump(2) + "\n";
    }

    auto report_csv(const vector<ClaimResult> & results, const ReportOptions & options) -> string
    {
        std::ostringstream out;
        out << "id,params,expected,computed,status,ms\n";
        for (auto & r : results)
            out << csv_field(r.id) << ',' << csv_field(join_params(r, ";")) << ',' << csv_field(r.expected) << ','
                << csv_field(r.computed) << ',' << status_name(r.status) << ',' << ms_of(r, options) << '\n';
        return out.str();
    }

    auto report_text(const vector<ClaimResult> & results, const ReportOptions & options) -> string
    {
        std::size_t id_width = 2, params_width = 6;
        for (auto & r : results) {
            id_width = std::max(id_width, r.id.size());
            params_width = std::max(params_width, join_params(r, ",").size() + 2);
        }

        std::ostringstream out;
        for (auto & r : results) {
            auto status = string(status_name(r.status));
            status.resize(14, ' ');
            auto id = r.id;
            id.resize(id_width, ' ');
            auto params = "(" + join_params(r, ",") + ")";
            params.resize(params_width, ' ');
            out << status << ' ' << id << ' ' << params << "  expected " << r.expected << "  computed " << r.computed;
            if (options.include_timings)
                out << "  " << r.ms << " ms";
            if (r.informational)
                out << "  [informational]";
            out << '\n';
        }
        return out.str();
    }
}
