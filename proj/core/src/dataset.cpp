#include "matchkit/dataset.hpp"

#include <fstream>

#include "json.hpp"

namespace matchkit {

using nlohmann::json;

double Dataset::mean_targets_per_image() const {
    if (images.empty()) return 0.0;
    std::size_t total = 0;
    for (const auto& img : images) total += img.targets.size();
    return static_cast<double>(total) / static_cast<double>(images.size());
}

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw CocoError(path.string() + ": " + what);
}

const json& need(const json& obj, const char* key, const std::filesystem::path& path,
                 const std::string& record) {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(path, record + ": missing '" + key + "'");
    return *it;
}

}  // namespace

Dataset load_coco(const std::filesystem::path& path, CocoLoadReport* report) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open");
    json root;
    try {
        root = json::parse(in);
    } catch (const json::exception& e) {
        fail(path, std::string("malformed JSON: ") + e.what());
    }

    Dataset ds;
    ds.provenance = Dataset::Provenance::kCocoJson;
    CocoLoadReport local;

    for (const auto& cat : need(root, "categories", path, "document")) {
        ds.categories[need(cat, "id", path, "categories entry").get<int>()] =
            need(cat, "name", path, "categories entry").get<std::string>();
    }

    std::map<long long, std::size_t> index_by_id;
    const json& images = need(root, "images", path, "document");
    for (std::size_t i = 0; i < images.size(); ++i) {
        const std::string record = "images[" + std::to_string(i) + "]";
        const auto& img = images[i];
        const long long id = need(img, "id", path, record).get<long long>();
        const int w = need(img, "width", path, record).get<int>();
        const int h = need(img, "height", path, record).get<int>();
        if (w <= 0 || h <= 0) fail(path, record + ": non-positive dimensions");
        if (index_by_id.count(id)) fail(path, record + ": duplicate image id");
        index_by_id[id] = ds.images.size();
        ds.images.push_back({std::to_string(id), w, h, {}});
    }

    const json& anns = need(root, "annotations", path, "document");
    for (std::size_t i = 0; i < anns.size(); ++i) {
        const std::string record = "annotations[" + std::to_string(i) + "]";
        const auto& ann = anns[i];
        const long long image_id = need(ann, "image_id", path, record).get<long long>();
        const auto img_it = index_by_id.find(image_id);
        if (img_it == index_by_id.end()) fail(path, record + ": unknown image_id");
        const int category = need(ann, "category_id", path, record).get<int>();
        if (!ds.categories.count(category)) fail(path, record + ": unknown category_id");
        const json& bbox = need(ann, "bbox", path, record);
        if (!bbox.is_array() || bbox.size() != 4)
            fail(path, record + ": bbox must be [x, y, w, h]");
        const double x = bbox[0].get<double>();
        const double y = bbox[1].get<double>();
        const double bw = bbox[2].get<double>();
        const double bh = bbox[3].get<double>();
        if (bw < 0.0 || bh < 0.0) fail(path, record + ": negative bbox dimensions");

        ImageAnnotations& img = ds.images[img_it->second];
        const Box raw{(x + 0.5 * bw) / img.width, (y + 0.5 * bh) / img.height,
                      bw / img.width, bh / img.height};
        // Clip to the canvas; degenerate results are dropped, not fatal.
        if (auto clipped = transform(raw, 1.0, 0.0, 0.0)) {
            img.targets.push_back({*clipped, category});
        } else {
            ++local.dropped_boxes;
        }
    }

    if (report) *report = local;
    return ds;
}

void save_coco(const Dataset& ds, const std::filesystem::path& path) {
    json root;
    root["images"] = json::array();
    root["annotations"] = json::array();
    root["categories"] = json::array();

    for (const auto& [id, name] : ds.categories)
        root["categories"].push_back({{"id", id}, {"name", name}});

    long long next_ann_id = 1;
    for (std::size_t i = 0; i < ds.images.size(); ++i) {
        const ImageAnnotations& img = ds.images[i];
        long long image_id = 0;
        try {
            image_id = std::stoll(img.id);
        } catch (...) {
            image_id = static_cast<long long>(i) + 1;
        }
        root["images"].push_back(
            {{"id", image_id}, {"width", img.width}, {"height", img.height}});
        for (const Target& t : img.targets) {
            root["annotations"].push_back(
                {{"id", next_ann_id++},
                 {"image_id", image_id},
                 {"category_id", t.label},
                 {"bbox",
                  {t.box.x0() * img.width, t.box.y0() * img.height, t.box.w * img.width,
                   t.box.h * img.height}}});
        }
    }

    std::ofstream out(path, std::ios::binary);
    if (!out) throw CocoError(path.string() + ": cannot open for writing");
    out << root.dump(2) << "\n";
    if (!out) throw CocoError(path.string() + ": write failed");
}

}  // namespace matchkit
