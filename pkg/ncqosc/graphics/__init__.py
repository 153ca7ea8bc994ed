from ncqosc.graphics.ggenergy import ggenergy, save_svg

__all__ = ['ggenergy', 'save_svg']
