"""gnuplot scripts that redraw a run from its CSV files."""
from app.models.trajectory import CSV_COLUMNS

_COL = {name: index + 1 for index, name in enumerate(CSV_COLUMNS)}


def _extent_lines(extent):
    if not extent:
        return ['set autoscale xy']
    xmin, xmax, ymin, ymax = extent
    return [f"set xrange [{xmin!r}:{xmax!r}]", f"set yrange [{ymin!r}:{ymax!r}]"]


def render_plot_script(csv_files, surface, extent=None, title='spherical robot run'):
    """Script for a 3D view over the terrain plus X, Y and Z against time.

    ``csv_files`` maps a series label to a CSV path relative to the script.
    """
    c = _COL
    lines = [
        '# generated; run with: gnuplot -p <this file>',
        'set datafile separator ","',
        'set key autotitle columnhead',
        f"f(x,y) = {surface.gnuplot_expr()}",
        'set multiplot layout 2,2 title "%s"' % title,
        '',
        '# 3D view: terrain, desired and actual contact paths',
        'set isosamples 40',
        'set hidden3d',
        'set view 60,30',
    ]
    lines.extend(_extent_lines(extent))
    series = []
    for index, (label, name) in enumerate(csv_files.items()):
        if index == 0:
            series.append(f"'{name}' using {c['xd']}:{c['yd']}:{c['zd']} with lines dt 2 title 'desired'")
        series.append(f"'{name}' using {c['x0']}:{c['y0']}:{c['z0']} with lines title '{label}'")
    lines.append('splot f(x,y) with lines lc rgb "#cccccc" notitle, \\')
    lines.append(',\\\n      '.join(series))
    lines.append('unset hidden3d')
    lines.append('set autoscale xy')
    lines.append('')
    for axis, actual, desired in (('X', 'x0', 'xd'), ('Y', 'y0', 'yd'), ('Z', 'z0', 'zd')):
        lines.append(f"# {axis} against time")
        lines.append("set xlabel 't [s]'")
        lines.append(f"set ylabel '{axis} [m]'")
        plots = []
        for index, (label, name) in enumerate(csv_files.items()):
            if index == 0:
                plots.append(f"'{name}' using {c['t']}:{c[desired]} with lines dt 2 title 'desired'")
            plots.append(f"'{name}' using {c['t']}:{c[actual]} with lines title '{label}'")
        lines.append('plot ' + ', \\\n     '.join(plots))
        lines.append('')
    lines.append('unset multiplot')
    return '\n'.join(lines) + '\n'
