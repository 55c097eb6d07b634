import akdual.generator.enumerate
