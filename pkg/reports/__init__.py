# Reports package: JSON and text rendering
from reports.report_generator import FORMATS, ReportGenerator

__all__ = ['FORMATS', 'ReportGenerator']
