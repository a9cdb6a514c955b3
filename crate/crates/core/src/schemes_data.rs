// Generated from the ColorBrewer 2.0 tables (colorbrewer2.org, Cynthia A. Brewer).
// Sizes 3 through 9 for each scheme.
pub(crate) static SCHEMES: &[(&str, SchemeKind, [&[&str]; 7])] = &[
    (
        "Blues",
        SchemeKind::Sequential,
        [
            &["#DEEBF7", "#9ECAE1", "#3182BD"],
            &["#EFF3FF", "#BDD7E7", "#6BAED6", "#2171B5"],
            &["#EFF3FF", "#BDD7E7", "#6BAED6", "#3182BD", "#08519C"],
            &["#EFF3FF", "#C6DBEF", "#9ECAE1", "#6BAED6", "#3182BD", "#08519C"],
            &["#EFF3FF", "#C6DBEF", "#9ECAE1", "#6BAED6", "#4292C6", "#2171B5", "#084594"],
            &["#F7FBFF", "#DEEBF7", "#C6DBEF", "#9ECAE1", "#6BAED6", "#4292C6", "#2171B5", "#084594"],
            &["#F7FBFF", "#DEEBF7", "#C6DBEF", "#9ECAE1", "#6BAED6", "#4292C6", "#2171B5", "#08519C", "#08306B"],
        ],
    ),
    (
        "BuGn",
        SchemeKind::Sequential,
        [
            &["#E5F5F9", "#99D8C9", "#2CA25F"],
            &["#EDF8FB", "#B2E2E2", "#66C2A4", "#238B45"],
            &["#EDF8FB", "#B2E2E2", "#66C2A4", "#2CA25F", "#006D2C"],
            &["#EDF8FB", "#CCECE6", "#99D8C9", "#66C2A4", "#2CA25F", "#006D2C"],
            &["#EDF8FB", "#CCECE6", "#99D8C9", "#66C2A4", "#41AE76", "#238B45", "#005824"],
            &["#F7FCFD", "#E5F5F9", "#CCECE6", "#99D8C9", "#66C2A4", "#41AE76", "#238B45", "#005824"],
            &["#F7FCFD", "#E5F5F9", "#CCECE6", "#99D8C9", "#66C2A4", "#41AE76", "#238B45", "#006D2C", "#00441B"],
        ],
    ),
    (
        "BuPu",
        SchemeKind::Sequential,
        [
            &["#E0ECF4", "#9EBCDA", "#8856A7"],
            &["#EDF8FB", "#B3CDE3", "#8C96C6", "#88419D"],
            &["#EDF8FB", "#B3CDE3", "#8C96C6", "#8856A7", "#810F7C"],
            &["#EDF8FB", "#BFD3E6", "#9EBCDA", "#8C96C6", "#8856A7", "#810F7C"],
            &["#EDF8FB", "#BFD3E6", "#9EBCDA", "#8C96C6", "#8C6BB1", "#88419D", "#6E016B"],
            &["#F7FCFD", "#E0ECF4", "#BFD3E6", "#9EBCDA", "#8C96C6", "#8C6BB1", "#88419D", "#6E016B"],
            &["#F7FCFD", "#E0ECF4", "#BFD3E6", "#9EBCDA", "#8C96C6", "#8C6BB1", "#88419D", "#810F7C", "#4D004B"],
        ],
    ),
    (
        "Greens",
        SchemeKind::Sequential,
        [
            &["#E5F5E0", "#A1D99B", "#31A354"],
            &["#EDF8E9", "#BAE4B3", "#74C476", "#238B45"],
            &["#EDF8E9", "#BAE4B3", "#74C476", "#31A354", "#006D2C"],
            &["#EDF8E9", "#C7E9C0", "#A1D99B", "#74C476", "#31A354", "#006D2C"],
            &["#EDF8E9", "#C7E9C0", "#A1D99B", "#74C476", "#41AB5D", "#238B45", "#005A32"],
            &["#F7FCF5", "#E5F5E0", "#C7E9C0", "#A1D99B", "#74C476", "#41AB5D", "#238B45", "#005A32"],
            &["#F7FCF5", "#E5F5E0", "#C7E9C0", "#A1D99B", "#74C476", "#41AB5D", "#238B45", "#006D2C", "#00441B"],
        ],
    ),
    (
        "Greys",
        SchemeKind::Sequential,
        [
            &["#F0F0F0", "#BDBDBD", "#636363"],
            &["#F7F7F7", "#CCCCCC", "#969696", "#525252"],
            &["#F7F7F7", "#CCCCCC", "#969696", "#636363", "#252525"],
            &["#F7F7F7", "#D9D9D9", "#BDBDBD", "#969696", "#636363", "#252525"],
            &["#F7F7F7", "#D9D9D9", "#BDBDBD", "#969696", "#737373", "#525252", "#252525"],
            &["#FFFFFF", "#F0F0F0", "#D9D9D9", "#BDBDBD", "#969696", "#737373", "#525252", "#252525"],
            &["#FFFFFF", "#F0F0F0", "#D9D9D9", "#BDBDBD", "#969696", "#737373", "#525252", "#252525", "#000000"],
        ],
    ),
    (
        "Oranges",
        SchemeKind::Sequential,
        [
            &["#FEE6CE", "#FDAE6B", "#E6550D"],
            &["#FEEDDE", "#FDBE85", "#FD8D3C", "#D94701"],
            &["#FEEDDE", "#FDBE85", "#FD8D3C", "#E6550D", "#A63603"],
            &["#FEEDDE", "#FDD0A2", "#FDAE6B", "#FD8D3C", "#E6550D", "#A63603"],
            &["#FEEDDE", "#FDD0A2", "#FDAE6B", "#FD8D3C", "#F16913", "#D94801", "#8C2D04"],
            &["#FFF5EB", "#FEE6CE", "#FDD0A2", "#FDAE6B", "#FD8D3C", "#F16913", "#D94801", "#8C2D04"],
            &["#FFF5EB", "#FEE6CE", "#FDD0A2", "#FDAE6B", "#FD8D3C", "#F16913", "#D94801", "#A63603", "#7F2704"],
        ],
    ),
    (
        "OrRd",
        SchemeKind::Sequential,
        [
            &["#FEE8C8", "#FDBB84", "#E34A33"],
            &["#FEF0D9", "#FDCC8A", "#FC8D59", "#D7301F"],
            &["#FEF0D9", "#FDCC8A", "#FC8D59", "#E34A33", "#B30000"],
            &["#FEF0D9", "#FDD49E", "#FDBB84", "#FC8D59", "#E34A33", "#B30000"],
            &["#FEF0D9", "#FDD49E", "#FDBB84", "#FC8D59", "#EF6548", "#D7301F", "#990000"],
            &["#FFF7EC", "#FEE8C8", "#FDD49E", "#FDBB84", "#FC8D59", "#EF6548", "#D7301F", "#990000"],
            &["#FFF7EC", "#FEE8C8", "#FDD49E", "#FDBB84", "#FC8D59", "#EF6548", "#D7301F", "#B30000", "#7F0000"],
        ],
    ),
    (
        "Purples",
        SchemeKind::Sequential,
        [
            &["#EFEDF5", "#BCBDDC", "#756BB1"],
            &["#F2F0F7", "#CBC9E2", "#9E9AC8", "#6A51A3"],
            &["#F2F0F7", "#CBC9E2", "#9E9AC8", "#756BB1", "#54278F"],
            &["#F2F0F7", "#DADAEB", "#BCBDDC", "#9E9AC8", "#756BB1", "#54278F"],
            &["#F2F0F7", "#DADAEB", "#BCBDDC", "#9E9AC8", "#807DBA", "#6A51A3", "#4A1486"],
            &["#FCFBFD", "#EFEDF5", "#DADAEB", "#BCBDDC", "#9E9AC8", "#807DBA", "#6A51A3", "#4A1486"],
            &["#FCFBFD", "#EFEDF5", "#DADAEB", "#BCBDDC", "#9E9AC8", "#807DBA", "#6A51A3", "#54278F", "#3F007D"],
        ],
    ),
    (
        "Reds",
        SchemeKind::Sequential,
        [
            &["#FEE0D2", "#FC9272", "#DE2D26"],
            &["#FEE5D9", "#FCAE91", "#FB6A4A", "#CB181D"],
            &["#FEE5D9", "#FCAE91", "#FB6A4A", "#DE2D26", "#A50F15"],
            &["#FEE5D9", "#FCBBA1", "#FC9272", "#FB6A4A", "#DE2D26", "#A50F15"],
            &["#FEE5D9", "#FCBBA1", "#FC9272", "#FB6A4A", "#EF3B2C", "#CB181D", "#99000D"],
            &["#FFF5F0", "#FEE0D2", "#FCBBA1", "#FC9272", "#FB6A4A", "#EF3B2C", "#CB181D", "#99000D"],
            &["#FFF5F0", "#FEE0D2", "#FCBBA1", "#FC9272", "#FB6A4A", "#EF3B2C", "#CB181D", "#A50F15", "#67000D"],
        ],
    ),
    (
        "YlGnBu",
        SchemeKind::Sequential,
        [
            &["#EDF8B1", "#7FCDBB", "#2C7FB8"],
            &["#FFFFCC", "#A1DAB4", "#41B6C4", "#225EA8"],
            &["#FFFFCC", "#A1DAB4", "#41B6C4", "#2C7FB8", "#253494"],
            &["#FFFFCC", "#C7E9B4", "#7FCDBB", "#41B6C4", "#2C7FB8", "#253494"],
            &["#FFFFCC", "#C7E9B4", "#7FCDBB", "#41B6C4", "#1D91C0", "#225EA8", "#0C2C84"],
            &["#FFFFD9", "#EDF8B1", "#C7E9B4", "#7FCDBB", "#41B6C4", "#1D91C0", "#225EA8", "#0C2C84"],
            &["#FFFFD9", "#EDF8B1", "#C7E9B4", "#7FCDBB", "#41B6C4", "#1D91C0", "#225EA8", "#253494", "#081D58"],
        ],
    ),
    (
        "YlOrRd",
        SchemeKind::Sequential,
        [
            &["#FFEDA0", "#FEB24C", "#F03B20"],
            &["#FFFFB2", "#FECC5C", "#FD8D3C", "#E31A1C"],
            &["#FFFFB2", "#FECC5C", "#FD8D3C", "#F03B20", "#BD0026"],
            &["#FFFFB2", "#FED976", "#FEB24C", "#FD8D3C", "#F03B20", "#BD0026"],
            &["#FFFFB2", "#FED976", "#FEB24C", "#FD8D3C", "#FC4E2A", "#E31A1C", "#B10026"],
            &["#FFFFCC", "#FFEDA0", "#FED976", "#FEB24C", "#FD8D3C", "#FC4E2A", "#E31A1C", "#B10026"],
            &["#FFFFCC", "#FFEDA0", "#FED976", "#FEB24C", "#FD8D3C", "#FC4E2A", "#E31A1C", "#BD0026", "#800026"],
        ],
    ),
    (
        "BrBG",
        SchemeKind::Diverging,
        [
            &["#D8B365", "#F5F5F5", "#5AB4AC"],
            &["#A6611A", "#DFC27D", "#80CDC1", "#018571"],
            &["#A6611A", "#DFC27D", "#F5F5F5", "#80CDC1", "#018571"],
            &["#8C510A", "#D8B365", "#F6E8C3", "#C7EAE5", "#5AB4AC", "#01665E"],
            &["#8C510A", "#D8B365", "#F6E8C3", "#F5F5F5", "#C7EAE5", "#5AB4AC", "#01665E"],
            &["#8C510A", "#BF812D", "#DFC27D", "#F6E8C3", "#C7EAE5", "#80CDC1", "#35978F", "#01665E"],
            &["#8C510A", "#BF812D", "#DFC27D", "#F6E8C3", "#F5F5F5", "#C7EAE5", "#80CDC1", "#35978F", "#01665E"],
        ],
    ),
    (
        "PiYG",
        SchemeKind::Diverging,
        [
            &["#E9A3C9", "#F7F7F7", "#A1D76A"],
            &["#D01C8B", "#F1B6DA", "#B8E186", "#4DAC26"],
            &["#D01C8B", "#F1B6DA", "#F7F7F7", "#B8E186", "#4DAC26"],
            &["#C51B7D", "#E9A3C9", "#FDE0EF", "#E6F5D0", "#A1D76A", "#4D9221"],
            &["#C51B7D", "#E9A3C9", "#FDE0EF", "#F7F7F7", "#E6F5D0", "#A1D76A", "#4D9221"],
            &["#C51B7D", "#DE77AE", "#F1B6DA", "#FDE0EF", "#E6F5D0", "#B8E186", "#7FBC41", "#4D9221"],
            &["#C51B7D", "#DE77AE", "#F1B6DA", "#FDE0EF", "#F7F7F7", "#E6F5D0", "#B8E186", "#7FBC41", "#4D9221"],
        ],
    ),
    (
        "PRGn",
        SchemeKind::Diverging,
        [
            &["#AF8DC3", "#F7F7F7", "#7FBF7B"],
            &["#7B3294", "#C2A5CF", "#A6DBA0", "#008837"],
            &["#7B3294", "#C2A5CF", "#F7F7F7", "#A6DBA0", "#008837"],
            &["#762A83", "#AF8DC3", "#E7D4E8", "#D9F0D3", "#7FBF7B", "#1B7837"],
            &["#762A83", "#AF8DC3", "#E7D4E8", "#F7F7F7", "#D9F0D3", "#7FBF7B", "#1B7837"],
            &["#762A83", "#9970AB", "#C2A5CF", "#E7D4E8", "#D9F0D3", "#A6DBA0", "#5AAE61", "#1B7837"],
            &["#762A83", "#9970AB", "#C2A5CF", "#E7D4E8", "#F7F7F7", "#D9F0D3", "#A6DBA0", "#5AAE61", "#1B7837"],
        ],
    ),
    (
        "RdBu",
        SchemeKind::Diverging,
        [
            &["#EF8A62", "#F7F7F7", "#67A9CF"],
            &["#CA0020", "#F4A582", "#92C5DE", "#0571B0"],
            &["#CA0020", "#F4A582", "#F7F7F7", "#92C5DE", "#0571B0"],
            &["#B2182B", "#EF8A62", "#FDDBC7", "#D1E5F0", "#67A9CF", "#2166AC"],
            &["#B2182B", "#EF8A62", "#FDDBC7", "#F7F7F7", "#D1E5F0", "#67A9CF", "#2166AC"],
            &["#B2182B", "#D6604D", "#F4A582", "#FDDBC7", "#D1E5F0", "#92C5DE", "#4393C3", "#2166AC"],
            &["#B2182B", "#D6604D", "#F4A582", "#FDDBC7", "#F7F7F7", "#D1E5F0", "#92C5DE", "#4393C3", "#2166AC"],
        ],
    ),
    (
        "RdYlBu",
        SchemeKind::Diverging,
        [
            &["#FC8D59", "#FFFFBF", "#91BFDB"],
            &["#D7191C", "#FDAE61", "#ABD9E9", "#2C7BB6"],
            &["#D7191C", "#FDAE61", "#FFFFBF", "#ABD9E9", "#2C7BB6"],
            &["#D73027", "#FC8D59", "#FEE090", "#E0F3F8", "#91BFDB", "#4575B4"],
            &["#D73027", "#FC8D59", "#FEE090", "#FFFFBF", "#E0F3F8", "#91BFDB", "#4575B4"],
            &["#D73027", "#F46D43", "#FDAE61", "#FEE090", "#E0F3F8", "#ABD9E9", "#74ADD1", "#4575B4"],
            &["#D73027", "#F46D43", "#FDAE61", "#FEE090", "#FFFFBF", "#E0F3F8", "#ABD9E9", "#74ADD1", "#4575B4"],
        ],
    ),
    (
        "RdYlGn",
        SchemeKind::Diverging,
        [
            &["#FC8D59", "#FFFFBF", "#91CF60"],
            &["#D7191C", "#FDAE61", "#A6D96A", "#1A9641"],
            &["#D7191C", "#FDAE61", "#FFFFBF", "#A6D96A", "#1A9641"],
            &["#D73027", "#FC8D59", "#FEE08B", "#D9EF8B", "#91CF60", "#1A9850"],
            &["#D73027", "#FC8D59", "#FEE08B", "#FFFFBF", "#D9EF8B", "#91CF60", "#1A9850"],
            &["#D73027", "#F46D43", "#FDAE61", "#FEE08B", "#D9EF8B", "#A6D96A", "#66BD63", "#1A9850"],
            &["#D73027", "#F46D43", "#FDAE61", "#FEE08B", "#FFFFBF", "#D9EF8B", "#A6D96A", "#66BD63", "#1A9850"],
        ],
    ),
    (
        "Spectral",
        SchemeKind::Diverging,
        [
            &["#FC8D59", "#FFFFBF", "#99D594"],
            &["#D7191C", "#FDAE61", "#ABDDA4", "#2B83BA"],
            &["#D7191C", "#FDAE61", "#FFFFBF", "#ABDDA4", "#2B83BA"],
            &["#D53E4F", "#FC8D59", "#FEE08B", "#E6F598", "#99D594", "#3288BD"],
            &["#D53E4F", "#FC8D59", "#FEE08B", "#FFFFBF", "#E6F598", "#99D594", "#3288BD"],
            &["#D53E4F", "#F46D43", "#FDAE61", "#FEE08B", "#E6F598", "#ABDDA4", "#66C2A5", "#3288BD"],
            &["#D53E4F", "#F46D43", "#FDAE61", "#FEE08B", "#FFFFBF", "#E6F598", "#ABDDA4", "#66C2A5", "#3288BD"],
        ],
    ),
];
