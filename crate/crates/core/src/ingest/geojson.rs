use serde_json::Value;

use crate::error::{Error, Result};
use crate::model::{AttrValue, Attributes, Polygon, RegionFeature};

/// Parses a GeoJSON FeatureCollection of Polygon/MultiPolygon features.
///
/// The feature id comes from the property `id_property` when given (it must
/// then be present on every feature), otherwise from the feature's `id`
/// member, otherwise from its 1-based position.
pub fn parse_regions(text: &[u8], id_property: Option<&str>) -> Result<Vec<RegionFeature>> {
    let doc: Value = serde_json::from_slice(text).map_err(|e| Error::MalformedGeoJson(e.to_string()))?;
    if doc.get("type").and_then(Value::as_str) != Some("FeatureCollection") {
        return Err(Error::MalformedGeoJson("top-level object is not a FeatureCollection".into()));
    }
    let features = doc
        .get("features")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::MalformedGeoJson("FeatureCollection has no \"features\" array".into()))?;

    features.iter().enumerate().map(|(i, f)| parse_feature(i, f, id_property)).collect()
}

fn parse_feature(index: usize, feature: &Value, id_property: Option<&str>) -> Result<RegionFeature> {
    let malformed = |msg: &str| Error::MalformedGeoJson(format!("feature {index}: {msg}"));
    if feature.get("type").and_then(Value::as_str) != Some("Feature") {
        return Err(malformed("object is not a Feature"));
    }

    let mut attributes = Attributes::new();
    match feature.get("properties") {
        Some(Value::Object(props)) => {
            for (k, v) in props {
                attributes.insert(k.clone(), json_attr(v));
            }
        }
        Some(Value::Null) | None => {}
        Some(_) => return Err(malformed("\"properties\" is not an object")),
    }

    let id = match id_property {
        Some(name) => attributes
            .get(name)
            .map(AttrValue::as_key)
            .ok_or_else(|| malformed(&format!("missing id property {name:?}")))?,
        None => match feature.get("id") {
            Some(Value::String(s)) => s.trim().to_string(),
            Some(Value::Number(n)) => json_attr(&Value::Number(n.clone())).as_key(),
            _ => (index + 1).to_string(),
        },
    };
    if id.is_empty() {
        return Err(malformed("empty id"));
    }

    let geometry = feature.get("geometry").ok_or_else(|| malformed("missing geometry"))?;
    let kind = geometry.get("type").and_then(Value::as_str).unwrap_or("null");
    let coords = geometry.get("coordinates");
    let polygons = match (kind, coords) {
        ("Polygon", Some(c)) => vec![parse_polygon(c).map_err(|m| malformed(&m))?],
        ("MultiPolygon", Some(Value::Array(parts))) => {
            parts.iter().map(parse_polygon).collect::<std::result::Result<Vec<_>, _>>().map_err(|m| malformed(&m))?
        }
        ("Polygon" | "MultiPolygon", _) => return Err(malformed("bad coordinates")),
        (other, _) => return Err(Error::UnsupportedGeometryType { feature: index, kind: other.to_string() }),
    };

    Ok(RegionFeature { id, polygons, attributes })
}

fn json_attr(v: &Value) -> AttrValue {
    match v {
        Value::Number(n) => n.as_f64().map(AttrValue::Number).unwrap_or_else(|| AttrValue::Text(n.to_string())),
        Value::String(s) => AttrValue::Text(s.clone()),
        Value::Null => AttrValue::Text(String::new()),
        other => AttrValue::Text(other.to_string()),
    }
}

fn parse_polygon(value: &Value) -> std::result::Result<Polygon, String> {
    let rings = value.as_array().ok_or("polygon is not an array of rings")?;
    let mut parsed = rings.iter().map(parse_ring);
    let exterior = parsed.next().ok_or("polygon has no rings")??;
    let holes = parsed.collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(Polygon { exterior, holes })
}

fn parse_ring(value: &Value) -> std::result::Result<Vec<[f64; 2]>, String> {
    let positions = value.as_array().ok_or("ring is not an array")?;
    let mut ring = Vec::with_capacity(positions.len());
    for p in positions {
        let xy = p.as_array().filter(|a| a.len() >= 2).ok_or("position needs two numbers")?;
        let x = xy[0].as_f64().ok_or("non-numeric coordinate")?;
        let y = xy[1].as_f64().ok_or("non-numeric coordinate")?;
        ring.push([x, y]);
    }
    if ring.len() > 1 && ring.first() == ring.last() {
        ring.pop();
    }
    let mut distinct = ring.clone();
    distinct.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    distinct.dedup();
    if distinct.len() < 3 {
        return Err("ring has fewer than three distinct vertices".into());
    }
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    const URUGUAY: &str = r#"{
      "type": "FeatureCollection",
      "name": "SACountries3",
      "features": [
        { "type": "Feature",
          "properties": { "NAME": "Uruguay", "CONTINENT": "South America", "NAME_EN": "Uruguay",
                          "X": -56.018070531500001, "Y": -32.7995153444, "CntryCode": 234 },
          "geometry": { "type": "MultiPolygon", "coordinates": [[[
            [-57.6, -30.2], [-53.4, -32.5], [-54.9, -34.9], [-58.4, -34.0], [-57.6, -30.2]
          ]]] } }
      ]
    }"#;

    #[test]
    fn feature_properties_and_id() {
        let regions = parse_regions(URUGUAY.as_bytes(), Some("CntryCode")).unwrap();
        assert_eq!(regions.len(), 1);
        assert_eq!(regions[0].id, "234");
        assert_eq!(regions[0].attributes.get("NAME"), Some(&AttrValue::Text("Uruguay".into())));
        assert_eq!(regions[0].attributes.get_f64("CntryCode"), Some(234.0));
        assert_eq!(regions[0].polygons[0].exterior.len(), 4);
    }

    #[test]
    fn empty_collection() {
        let regions = parse_regions(br#"{"type":"FeatureCollection","features":[]}"#, None).unwrap();
        assert!(regions.is_empty());
    }

    #[test]
    fn line_string_is_unsupported() {
        let text = br#"{"type":"FeatureCollection","features":[
            {"type":"Feature","properties":{},"geometry":{"type":"LineString","coordinates":[[0,0],[1,1]]}}]}"#;
        let err = parse_regions(text, None).unwrap_err();
        assert!(matches!(err, Error::UnsupportedGeometryType { feature: 0, ref kind } if kind == "LineString"));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let err = parse_regions(b"{\"type\": \"FeatureCollection\",\n \"features\": [", None).unwrap_err();
        assert!(matches!(err, Error::MalformedGeoJson(ref m) if m.contains("line 2")), "{err}");
    }

    #[test]
    fn default_ids_and_holes() {
        let text = br#"{"type":"FeatureCollection","features":[
            {"type":"Feature","id":"sq","properties":null,"geometry":{"type":"Polygon","coordinates":[
              [[0,0],[4,0],[4,4],[0,4],[0,0]], [[1,1],[2,1],[2,2],[1,2],[1,1]]]}},
            {"type":"Feature","properties":{},"geometry":{"type":"Polygon","coordinates":[[[0,0],[1,0],[0,1]]]}}]}"#;
        let regions = parse_regions(text, None).unwrap();
        assert_eq!(regions[0].id, "sq");
        assert_eq!(regions[0].polygons[0].holes.len(), 1);
        assert_eq!(regions[1].id, "2");
    }

    #[test]
    fn degenerate_ring_rejected() {
        let text = br#"{"type":"FeatureCollection","features":[
            {"type":"Feature","properties":{},"geometry":{"type":"Polygon","coordinates":[[[0,0],[1,1],[0,0]]]}}]}"#;
        assert!(matches!(parse_regions(text, None), Err(Error::MalformedGeoJson(_))));
    }
}
