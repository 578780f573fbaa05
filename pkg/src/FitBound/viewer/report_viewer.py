#!/usr/bin/env python3
'''
A widget showing a JSON verification report, one row per record

Author  :   Michael Biselx
Date    :   10.2026
Project :   FitBound
'''

__all__ = [
    'ReportViewer',
    'show_report',
]

import sys
import json
import typing
import logging

from PyQt5 import QtCore, QtGui, QtWidgets

from .colors import color_of


class ReportViewer(QtWidgets.QFrame):
    '''
    A table of the records of a report: label, status, then one column per check

    @parameters :
    * `parent`    :   (optional) the parent QtWidget
    * `flags`     :   (optional) the window flags for the instantiation of the widget
    * `report`    :   (optional) the JSON report file to load
    '''

    def __init__(self,
                 parent: typing.Optional[QtWidgets.QWidget] = None,
                 flags: typing.Union[QtCore.Qt.WindowFlags, QtCore.Qt.WindowType] = QtCore.Qt.WindowType.Widget,
                 report: typing.Optional[str] = None) -> None:
        super().__init__(parent, flags)
        self.logger = logging.getLogger(self.__class__.__name__)

        self.summary = QtWidgets.QLabel(self)
        self.table = QtWidgets.QTableWidget(self)
        self.table.setEditTriggers(QtWidgets.QAbstractItemView.EditTrigger.NoEditTriggers)
        self.table.verticalHeader().setVisible(False)

        self.setLayout(QtWidgets.QVBoxLayout(self))
        self.layout().addWidget(self.summary)
        self.layout().addWidget(self.table)

        if report is not None:
            self.fromFile(report)

    def fromFile(self, filename: str) -> None:
        '''read the report from a JSON file'''
        with open(filename) as f:
            report: 'dict[str, typing.Any]' = json.load(f)
        self.setWindowTitle(filename)
        self.fromReport(report)

    def fromReport(self, report: 'dict[str, typing.Any]') -> None:
        records = report.get('records', [])
        columns: 'list[str]' = []
        for record in records:
            for check in record.get('checks', []) + record.get('addenda', []):
                if check['name'] not in columns:
                    columns.append(check['name'])

        self.table.clear()
        self.table.setColumnCount(2 + len(columns))
        self.table.setRowCount(len(records))
        self.table.setHorizontalHeaderLabels(['label', 'status'] + columns)
        for row, record in enumerate(records):
            self.table.setItem(row, 0, QtWidgets.QTableWidgetItem(record['label']))
            self.table.setItem(row, 1, self._item(record['status'], record.get('error', '')))
            for check in record.get('checks', []) + record.get('addenda', []):
                self.table.setItem(row, 2 + columns.index(check['name']),
                                   self._item(check['outcome'], check.get('detail', '')))
        self.table.resizeColumnsToContents()

        statuses = report.get('summary', {}).get('statuses', {})
        self.summary.setText(', '.join(f"{n} {status}" for status, n in sorted(statuses.items())))
        self.logger.debug(f"showing {len(records)} records and {len(columns)} checks")

    def _item(self, state: str, tooltip: str = '') -> QtWidgets.QTableWidgetItem:
        item = QtWidgets.QTableWidgetItem(state)
        item.setForeground(QtGui.QBrush(QtGui.QColor(*color_of(state))))
        if tooltip:
            item.setToolTip(tooltip)
        return item


def show_report(filename: str) -> int:
    '''run a Qt app showing the report, returning its exit code'''
    app = QtWidgets.QApplication.instance() or QtWidgets.QApplication(sys.argv)
    viewer = ReportViewer(report=filename)
    viewer.resize(1000, 600)
    viewer.show()
    return app.exec_()


if __name__ == '__main__':
    logging.basicConfig(level=logging.DEBUG)
    sys.exit(show_report(sys.argv[1]))
