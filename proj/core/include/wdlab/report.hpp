#pragma once

#include <map>
#include <string>

namespace wdlab {

/// Per-key verdicts: "pass" or "fail:<detail>".
struct Report
{
    std::map<int, std::string> per_component;
    bool overall = true;

    /// A key that already failed stays failed.
    void pass(int key) { per_component.try_emplace(key, "pass"); }
    void fail(int key, const std::string& detail)
    {
        auto& slot = per_component[key];
        if (slot.rfind("fail:", 0) != 0)
            slot = "fail:" + detail;
        overall = false;
    }
    bool passed(int key) const
    {
        auto it = per_component.find(key);
        return it != per_component.end() && it->second == "pass";
    }
};

}  // namespace wdlab
