# SVG fill and stroke colours
white = "#ffffff"

spectrum_fill = "#9ecae1"
spectrum_stroke = "#3182bd"
approximate_stroke = "#08306b"
residual_stroke = "#e6550d"
bounds_fill = "#d9d9d9"
label_text = "#252525"

# ends of the heat ramp for resolvent gaps, small gaps are hot
heat_low = ( 0xFF, 0x30, 0x30 )
heat_high = ( 0x20, 0x40, 0xFF )
