from ordspeed.text_utils.report_formatting import (formatting_csv,
                                                   formatting_json,
                                                   formatting_report,
                                                   formatting_table)
