# utils/report_exporter.py - Write Reports as Matrix Files, JSON and Excel
import logging
import os

import openpyxl
from openpyxl.styles import Alignment, Font, PatternFill

from config import Config
from utils.input_processor import format_matrix

logger = logging.getLogger(__name__)

MATRIX_FILES = (
    ('hilb', 'hilbert_basis', 'Hilbert Basis'),
    ('ext', 'extreme_rays', 'Extreme Rays'),
    ('supp', 'support_forms', 'Support Forms'),
)


def format_hvector(report):
    """h-vector row followed by the Hilbert polynomial coefficients as p/q tokens"""
    lines = [' '.join(str(h) for h in report.h_vector), ' '.join(report.hilbert_polynomial)]
    return '\n'.join(lines) + '\n'


def report_json(report):
    exclude = None if Config.JSON_TIMINGS else {'timings'}
    return report.model_dump_json(indent=2, exclude=exclude) + '\n'


def _write_text(path, text):
    with open(path, 'w', encoding='utf-8', newline='\n') as handle:
        handle.write(text)
    logger.debug(f'Wrote {path}')
    return path


def emit(report, prefix, json_only=False, xlsx=False):
    """Write the output files for `report`; returns the written paths"""
    written = []
    if not json_only:
        for suffix, field, _ in MATRIX_FILES:
            rows = getattr(report, field)
            written.append(_write_text(f'{prefix}.{suffix}', format_matrix(rows, report.ambient_dim)))
        hvec_path = f'{prefix}.hvec'
        if report.h_vector is not None:
            written.append(_write_text(hvec_path, format_hvector(report)))
        elif os.path.exists(hvec_path):
            # stale file of an earlier run
            os.remove(hvec_path)
    written.append(_write_text(f'{prefix}.json', report_json(report)))
    if xlsx:
        written.append(export_workbook(report, f'{prefix}.xlsx'))
    logger.info(f'Wrote {len(written)} files with prefix {prefix}')
    return written


def _style_headers(sheet, headers):
    header_font = Font(bold=True, color="FFFFFF")
    header_fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
    for col, header in enumerate(headers, 1):
        cell = sheet.cell(row=1, column=col)
        cell.value = header
        cell.font = header_font
        cell.fill = header_fill
        cell.alignment = Alignment(horizontal="center")


def export_workbook(report, file_path):
    """Excel workbook with a summary sheet and one sheet per matrix"""
    workbook = openpyxl.Workbook()
    create_summary_sheet(workbook.active, report)

    for _, field, title in MATRIX_FILES:
        sheet = workbook.create_sheet(title)
        _style_headers(sheet, [f'x{i + 1}' for i in range(report.ambient_dim)])
        for row_num, row in enumerate(sorted(getattr(report, field)), 2):
            for col, value in enumerate(row, 1):
                sheet.cell(row=row_num, column=col).value = value

    if report.h_vector is not None:
        sheet = workbook.create_sheet('h-Vector')
        _style_headers(sheet, ['i', 'h_i', 'Hilbert polynomial coefficient of k^i'])
        rows = max(len(report.h_vector), len(report.hilbert_polynomial))
        for i in range(rows):
            sheet.cell(row=i + 2, column=1).value = i
            if i < len(report.h_vector):
                sheet.cell(row=i + 2, column=2).value = report.h_vector[i]
            if i < len(report.hilbert_polynomial):
                sheet.cell(row=i + 2, column=3).value = report.hilbert_polynomial[i]

    workbook.save(file_path)
    logger.debug(f'Wrote {file_path}')
    return file_path


def create_summary_sheet(sheet, report):
    """Summary sheet with the run's key numbers"""
    sheet.title = 'Summary'
    sheet['A1'] = 'Hilbert Basis Report'
    sheet['A1'].font = Font(size=16, bold=True, color="366092")

    details = [
        ('Input mode', report.input_mode),
        ('Algorithm', report.algorithm),
        ('Lattice', report.lattice_mode),
        ('Ambient dimension', report.ambient_dim),
        ('Cone dimension', report.dim),
        ('Pointed', 'yes' if report.pointed else 'no'),
        ('Hilbert basis elements', len(report.hilbert_basis)),
        ('Extreme rays', len(report.extreme_rays)),
        ('Support hyperplanes', report.num_support_hyperplanes),
        ('Lattice index', report.lattice_index),
        ('Triangulation cells', report.triangulation_size),
        ('Total multiplicity', report.total_multiplicity),
    ]
    row = 3
    for label, value in details:
        sheet[f'A{row}'] = label
        sheet[f'A{row}'].font = Font(bold=True)
        sheet[f'B{row}'] = value if value is not None else '-'
        row += 1

    if report.warnings:
        row += 1
        sheet[f'A{row}'] = 'Warnings:'
        sheet[f'A{row}'].font = Font(bold=True)
        row += 1
        for warning in report.warnings:
            sheet[f'A{row}'] = f'• {warning}'
            row += 1

    sheet.column_dimensions['A'].width = 28
    sheet.column_dimensions['B'].width = 24
